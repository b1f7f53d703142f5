// Copyright 2026 The orientwalk Authors.
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

#include "orientwalk/env.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orientwalk {

namespace {

template <class T>
T ParseInteger(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("bad " + std::string(what) + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

void CheckCoordinate(std::int64_t v, const char* what) {
  if (v >= kCoordinateLimit || v <= -kCoordinateLimit) {
    throw std::out_of_range(std::string(what) + " magnitude exceeds 2^62");
  }
}

int ExplicitSigns::operator()(std::int64_t y) const {
  const auto it = table->find(y);
  if (it == table->end()) {
    throw std::out_of_range("ordinate " + std::to_string(y) +
                            " not covered by explicit environment");
  }
  return it->second;
}

Environment Environment::Alternate() { return Environment(AlternateSigns{}); }

Environment Environment::HalfPlane() { return Environment(HalfPlaneSigns{}); }

Environment Environment::Strip(std::int64_t width) {
  if (width < 1) throw std::invalid_argument("strip width must be >= 1");
  return Environment(StripSigns{width});
}

Environment Environment::RandomIid(std::uint64_t seed) {
  return Environment(RandomSigns{seed});
}

Environment Environment::Explicit(std::map<std::int64_t, int> table) {
  for (const auto& [y, s] : table) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("explicit sign at y=" + std::to_string(y) +
                                  " is not +1/-1");
    }
    CheckCoordinate(y, "ordinate");
  }
  return Environment(ExplicitSigns{
      std::make_shared<const std::map<std::int64_t, int>>(std::move(table))});
}

Environment::Kind Environment::kind() const {
  return static_cast<Kind>(rule_.index());
}

int Environment::Epsilon(std::int64_t y) const {
  CheckCoordinate(y, "ordinate");
  return Visit([y](const auto& rule) { return rule(y); });
}

Environment Environment::ForTrial(std::uint64_t trial) const {
  if (const auto* random = std::get_if<RandomSigns>(&rule_)) {
    return RandomIid(Mix64(DeriveKey(random->seed, Domain::kEnvironment) ^
                           Mix64(trial)));
  }
  return *this;
}

std::string Environment::Spec() const {
  switch (kind()) {
    case Kind::kAlternate:
      return "alternate";
    case Kind::kHalfPlane:
      return "halfplane";
    case Kind::kStrip:
      return "strip:" + std::to_string(std::get<StripSigns>(rule_).width);
    case Kind::kRandomIid:
      return "random:" + std::to_string(std::get<RandomSigns>(rule_).seed);
    case Kind::kExplicit: {
      std::ostringstream out;
      out << "explicit:{";
      bool first = true;
      for (const auto& [y, s] : *std::get<ExplicitSigns>(rule_).table) {
        out << (first ? "" : ",") << y << ':' << (s > 0 ? "+1" : "-1");
        first = false;
      }
      out << '}';
      return out.str();
    }
  }
  return {};
}

double BalanceStatistic(const Environment& env, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("balance statistic needs N >= 1");
  std::int64_t sum = 0;
  for (std::int64_t y = -n; y <= n; ++y) sum += env.Epsilon(y);
  return static_cast<double>(sum) / static_cast<double>(n);
}

std::map<std::int64_t, int> ReadSignTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open sign table '" + path.string() +
                                "'");
  }
  std::map<std::int64_t, int> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string y_text, s_text, extra;
    if (!(fields >> y_text)) continue;
    if (!(fields >> s_text) || (fields >> extra)) {
      throw std::invalid_argument(path.string() + ":" +
                                  std::to_string(line_no) +
                                  ": expected two columns 'y sign'");
    }
    if (s_text.front() == '+') s_text.erase(0, 1);
    const auto y = ParseInteger<std::int64_t>(y_text, "ordinate");
    const auto s = ParseInteger<int>(s_text, "sign");
    if (!table.emplace(y, s).second) {
      throw std::invalid_argument(path.string() + ": duplicate ordinate " +
                                  y_text);
    }
  }
  return table;
}

Environment ParseEnvironment(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{}
                                      : spec.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  if (name == "alternate" && !has_arg) return Environment::Alternate();
  if (name == "halfplane" && !has_arg) return Environment::HalfPlane();
  if (name == "strip" && has_arg) {
    return Environment::Strip(ParseInteger<std::int64_t>(arg, "strip width"));
  }
  if (name == "random" && has_arg) {
    return Environment::RandomIid(ParseInteger<std::uint64_t>(arg, "seed"));
  }
  if (name == "explicit" && has_arg) {
    return Environment::Explicit(ReadSignTable(std::string(arg)));
  }
  throw std::invalid_argument(
      "unknown lattice spec '" + std::string(spec) +
      "' (expected alternate, halfplane, strip:<l>, random:<seed>, "
      "explicit:<path>)");
}

}  // namespace orientwalk
