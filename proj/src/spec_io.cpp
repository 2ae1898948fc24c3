#include "sglab/spec_io.hpp"

#include <algorithm>
#include <cctype>

#include "sglab/error.hpp"

namespace sglab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedSpec, what); }

}  // namespace

std::vector<CycleWord> parse_generator_list(const std::string& text) {
  std::vector<CycleWord> gens;
  CycleWord word;
  bool word_open = false;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ',') {
      if (!word_open) malformed("empty generator in '" + text + "'");
      gens.push_back(std::move(word));
      word = {};
      word_open = false;
      ++i;
    } else if (c == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string::npos) malformed("unbalanced '(' in '" + text + "'");
      Cycle cycle;
      std::string body = text.substr(i + 1, close - i - 1);
      std::size_t j = 0;
      while (j < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[j])) || body[j] == ',') {
          ++j;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(body[j]))) malformed("bad character in cycle '(" + body + ")'");
        std::size_t k = j;
        while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
        cycle.push_back(std::stoul(body.substr(j, k - j)));
        j = k;
      }
      if (!cycle.empty()) word.push_back(std::move(cycle));
      word_open = true;
      i = close + 1;
    } else {
      malformed(std::string("unexpected character '") + c + "' in generator list '" + text + "'");
    }
  }
  if (word_open) gens.push_back(std::move(word));
  return gens;
}

GroupSpec parse_group_spec_text(const std::string& text) {
  GroupSpec spec;
  bool have_degree = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string field = trim(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (!field.empty()) {
      std::size_t eq = field.find('=');
      if (eq == std::string::npos) malformed("field without '=': '" + field + "'");
      std::string key = trim(field.substr(0, eq));
      std::string value = trim(field.substr(eq + 1));
      if (key == "name") {
        spec.name = value;
      } else if (key == "degree") {
        if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char ch) { return std::isdigit(ch); }))
          malformed("degree must be a nonnegative integer, got '" + value + "'");
        spec.degree = std::stoul(value);
        have_degree = true;
      } else if (key == "gens") {
        spec.generators = parse_generator_list(value);
      } else {
        malformed("unknown field '" + key + "'");
      }
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (!have_degree) malformed("missing degree");
  return spec;
}

GroupSpec parse_group_spec_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("group spec JSON must be an object");
  GroupSpec spec;
  try {
    spec.name = j.value("name", std::string{});
    spec.degree = j.at("degree").get<std::size_t>();
    if (j.contains("generators")) {
      for (const auto& gen : j.at("generators")) {
        CycleWord word;
        for (const auto& cycle : gen) word.push_back(cycle.get<Cycle>());
        spec.generators.push_back(std::move(word));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("group spec JSON: ") + e.what());
  }
  return spec;
}

nlohmann::json to_json(const GroupSpec& spec) {
  nlohmann::json gens = nlohmann::json::array();
  for (const CycleWord& word : spec.generators) gens.push_back(word);
  return {{"name", spec.name}, {"degree", spec.degree}, {"generators", gens}};
}

std::string to_text(const GroupSpec& spec) {
  std::string gens;
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    if (g) gens += ", ";
    if (spec.generators[g].empty()) gens += "()";
    for (const Cycle& c : spec.generators[g]) {
      gens += '(';
      for (std::size_t i = 0; i < c.size(); ++i) gens += (i ? " " : "") + std::to_string(c[i]);
      gens += ')';
    }
  }
  return "name=" + spec.name + "; degree=" + std::to_string(spec.degree) + "; gens=" + gens;
}

GroupSpec parse_group_spec(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      malformed(std::string("group spec JSON: ") + e.what());
    }
    return parse_group_spec_json(j);
  }
  return parse_group_spec_text(t);
}

}  // namespace sglab
