// Copyright 2026 The cwpot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <string>

#include "cwpot/errors.h"
#include "cwpot/game.h"
#include "json.hpp"

namespace cwpot {
namespace {

using json = nlohmann::json;

std::string at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("malformed JSON: ") + e.what());
  }
}

int read_count(const json& doc, const std::string& key, int min_value) {
  if (!doc.contains(key)) throw InputError(key, "missing");
  const json& v = doc[key];
  if (!v.is_number_integer()) throw InputError(key, "expected an integer");
  const auto value = v.get<long long>();
  if (value < min_value || value > 1'000'000) {
    throw InputError(key, "must be at least " + std::to_string(min_value));
  }
  return static_cast<int>(value);
}

double read_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw InputError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(path, "must be finite");
  return x;
}

const json& read_array(const json& v, const std::string& path,
                       std::size_t expected) {
  if (!v.is_array()) throw InputError(path, "expected an array");
  if (v.size() != expected) {
    throw InputError(path, "expected " + std::to_string(expected) +
                               " entries, found " + std::to_string(v.size()));
  }
  return v;
}

CosetWeights read_weights(const json& v, const GameShape& shape,
                          const std::string& path) {
  read_array(v, path, static_cast<std::size_t>(shape.players()));
  std::vector<RowVector> rows;
  for (int i = 1; i <= shape.players(); ++i) {
    const std::string row_path = at(path, i - 1);
    const json& row = read_array(v[i - 1], row_path, shape.coset_count(i));
    RowVector r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string entry = at(row_path, j);
      r(j) = read_number(row[j], entry);
      if (!(r(j) > 0.0)) {
        throw InputError(entry, "weights must be strictly positive, got " +
                                    row[j].dump());
      }
    }
    rows.push_back(std::move(r));
  }
  return CosetWeights(shape, std::move(rows));
}

}  // namespace

GameDocument parse_game(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw InputError("", "expected a JSON object");

  const int n = read_count(doc, "players", 1);
  if (!doc.contains("cardinalities")) {
    throw InputError("cardinalities", "missing");
  }
  const json& cards_json =
      read_array(doc["cardinalities"], "cardinalities", n);
  std::vector<int> cards;
  for (std::size_t i = 0; i < cards_json.size(); ++i) {
    const json& c = cards_json[i];
    if (!c.is_number_integer() || c.get<long long>() < 2 ||
        c.get<long long>() > 1'000'000) {
      throw InputError(at("cardinalities", i), "expected an integer >= 2");
    }
    cards.push_back(c.get<int>());
  }
  GameShape shape(std::move(cards));
  if (shape.profile_count() > 10'000'000) {
    throw InputError("cardinalities", "too many strategy profiles");
  }

  if (!doc.contains("payoffs")) throw InputError("payoffs", "missing");
  const json& rows = read_array(doc["payoffs"], "payoffs", n);
  Matrix payoffs(n, shape.profile_count());
  for (int i = 0; i < n; ++i) {
    const std::string row_path = at("payoffs", i);
    const json& row = read_array(rows[i], row_path, shape.profile_count());
    for (std::size_t m = 0; m < row.size(); ++m) {
      payoffs(i, m) = read_number(row[m], at(row_path, m));
    }
  }

  std::optional<CosetWeights> weights;
  if (doc.contains("weights") && !doc["weights"].is_null()) {
    weights = read_weights(doc["weights"], shape, "weights");
  }
  return GameDocument{Game(std::move(shape), std::move(payoffs)),
                      std::move(weights)};
}

CosetWeights parse_weights(std::string_view text, const GameShape& shape) {
  const json doc = parse_document(text);
  if (doc.is_object()) {
    if (!doc.contains("weights")) throw InputError("weights", "missing");
    return read_weights(doc["weights"], shape, "weights");
  }
  return read_weights(doc, shape, "weights");
}

std::string serialize_game(const Game& g,
                           const std::optional<CosetWeights>& weights) {
  const GameShape& shape = g.shape();
  json doc;
  doc["players"] = shape.players();
  doc["cardinalities"] =
      std::vector<int>(shape.cards().begin(), shape.cards().end());
  json rows = json::array();
  for (int i = 0; i < shape.players(); ++i) {
    json row = json::array();
    for (Eigen::Index m = 0; m < g.payoffs().cols(); ++m) {
      row.push_back(g.payoffs()(i, m));
    }
    rows.push_back(std::move(row));
  }
  doc["payoffs"] = std::move(rows);
  if (weights) {
    json wrows = json::array();
    for (const RowVector& r : weights->rows()) {
      json row = json::array();
      for (Eigen::Index j = 0; j < r.size(); ++j) row.push_back(r(j));
      wrows.push_back(std::move(row));
    }
    doc["weights"] = std::move(wrows);
  }
  return doc.dump(2) + "\n";
}

}  // namespace cwpot
