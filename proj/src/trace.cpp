// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/trace.hpp"

#include <array>
#include <stdexcept>

#include "json.hpp"

namespace bock {

namespace {

constexpr std::array<std::pair<Label, std::string_view>, 10> kLabelNames{{
    {Label::kL2, "L2"},
    {Label::kL3, "L3"},
    {Label::kL4, "L4"},
    {Label::kL5, "L5"},
    {Label::kL7Contract, "L7-contract"},
    {Label::kL8Step, "L8-step"},
    {Label::kL9, "L9"},
    {Label::kL10Step, "L10-step"},
    {Label::kL98, "L98"},
    {Label::kL99, "L99"},
}};

const TraceField* find_field(const std::vector<TraceField>& fields, std::string_view name) {
  for (const auto& field : fields) {
    if (field.name == name) {
      return &field;
    }
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(Label label) {
  for (const auto& [value, name] : kLabelNames) {
    if (value == label) {
      return name;
    }
  }
  return "?";
}

std::optional<Label> label_from_string(std::string_view name) {
  for (const auto& [value, text] : kLabelNames) {
    if (text == name) {
      return value;
    }
  }
  return std::nullopt;
}

TraceEvent& TraceEvent::add(std::string name, std::int64_t value) {
  fields.push_back({std::move(name), value});
  return *this;
}

TraceEvent& TraceEvent::add(std::string name, std::vector<std::int64_t> values) {
  fields.push_back({std::move(name), std::move(values)});
  return *this;
}

std::int64_t TraceEvent::scalar(std::string_view name) const {
  const auto* field = find_field(fields, name);
  if (field == nullptr || !std::holds_alternative<std::int64_t>(field->value)) {
    throw std::out_of_range("trace event " + std::string(to_string(label)) +
                            " has no scalar field '" + std::string(name) + "'");
  }
  return std::get<std::int64_t>(field->value);
}

const std::vector<std::int64_t>& TraceEvent::list(std::string_view name) const {
  const auto* field = find_field(fields, name);
  if (field == nullptr || !std::holds_alternative<std::vector<std::int64_t>>(field->value)) {
    throw std::out_of_range("trace event " + std::string(to_string(label)) +
                            " has no list field '" + std::string(name) + "'");
  }
  return std::get<std::vector<std::int64_t>>(field->value);
}

bool TraceEvent::has(std::string_view name) const { return find_field(fields, name) != nullptr; }

std::string to_record(const TraceEvent& event, std::string_view engine, std::size_t seq) {
  nlohmann::ordered_json record;
  record["engine"] = engine;
  record["seq"] = seq;
  record["label"] = to_string(event.label);
  record["k"] = event.k;
  for (const auto& field : event.fields) {
    std::visit([&](const auto& value) { record[field.name] = value; }, field.value);
  }
  return record.dump();
}

std::pair<TraceEvent, std::string> from_record(std::string_view line) {
  const auto record = nlohmann::ordered_json::parse(line);
  TraceEvent event;
  const auto label = label_from_string(record.at("label").get<std::string>());
  if (!label) {
    throw std::invalid_argument("unknown trace label in record: " + std::string(line));
  }
  event.label = *label;
  event.k = record.at("k").get<int>();
  for (const auto& [key, value] : record.items()) {
    if (key == "engine" || key == "seq" || key == "label" || key == "k") {
      continue;
    }
    if (value.is_array()) {
      event.add(key, value.get<std::vector<std::int64_t>>());
    } else {
      event.add(key, value.get<std::int64_t>());
    }
  }
  return {std::move(event), record.at("engine").get<std::string>()};
}

}  // namespace bock
