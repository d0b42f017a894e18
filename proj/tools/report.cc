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

#include "report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace cwpot::cli {
namespace {

const std::set<std::string, std::less<>>& profile_keys() {
  static const std::set<std::string, std::less<>> keys = {
      "nash_equilibria", "potential_argmax", "states", "start", "end"};
  return keys;
}

void write_scalar(const Json& v, std::ostream& os) {
  if (v.is_number_float()) {
    os << format_number(v.get<double>());
  } else {
    os << v.dump();
  }
}

void write_json(const Json& v, std::ostream& os, int indent) {
  const std::string pad(indent + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(key).dump() << ": ";
      write_json(item, os, indent + 2);
    }
    os << "\n" << std::string(indent, ' ') << "}";
  } else if (v.is_array()) {
    const bool flat = std::none_of(v.begin(), v.end(), [](const Json& e) {
      return e.is_structured();
    });
    if (v.empty() || flat) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) os << ", ";
        write_scalar(v[i], os);
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) os << ",\n";
      os << pad;
      write_json(v[i], os, indent + 2);
    }
    os << "\n" << std::string(indent, ' ') << "]";
  } else {
    write_scalar(v, os);
  }
}

bool is_int_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
           return e.is_number_integer();
         });
}

std::string profile_text(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += v[i].dump();
  }
  return s + ")";
}

void write_text_value(const Json& v, bool profiles, std::ostream& os) {
  if (profiles && is_int_array(v)) {
    os << profile_text(v);
  } else if (v.is_array()) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) os << ", ";
      write_text_value(v[i], profiles, os);
    }
    os << "]";
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else if (v.is_object()) {
    os << "{";
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      if (!first) os << ", ";
      first = false;
      os << key << ": ";
      write_text_value(item, profiles || profile_keys().count(key) > 0, os);
    }
    os << "}";
  } else {
    write_scalar(v, os);
  }
}

void write_text(const Json& v, const std::string& prefix, std::ostream& os) {
  for (const auto& [key, item] : v.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (item.is_object() && !item.empty()) {
      write_text(item, name, os);
      continue;
    }
    const bool profiles = profile_keys().count(key) > 0;
    // Lists of profiles or of records read better one per line.
    if (item.is_array() && !item.empty() && item[0].is_structured() &&
        !(profiles && is_int_array(item[0]) && item.size() <= 8)) {
      os << name << ":\n";
      for (const Json& e : item) {
        os << "  ";
        write_text_value(e, profiles, os);
        os << "\n";
      }
      continue;
    }
    os << name << ": ";
    write_text_value(item, profiles, os);
    os << "\n";
  }
}

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_json(const Json& report) {
  std::ostringstream os;
  write_json(report, os, 0);
  os << "\n";
  return os.str();
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  write_text(report, "", os);
  return os.str();
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const RowVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const Vector& v) { return to_json(RowVector(v.transpose())); }

Json to_json(const StrategyProfile& p) {
  Json out = Json::array();
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) out.push_back(p[i]);
  return out;
}

Json to_json(const std::vector<StrategyProfile>& ps) {
  Json out = Json::array();
  for (const StrategyProfile& p : ps) out.push_back(to_json(p));
  return out;
}

}  // namespace cwpot::cli
