#include "presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <utility>

#include <json.hpp>

#include "amalgam/errors.hpp"
#include "amalgam/perm_group.hpp"

namespace amalgam::cli {
namespace {

using nlohmann::json;

struct Entry {
  std::string key;
  json value;
  int line;
};

struct Section {
  std::string name;
  std::vector<Entry> entries;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

int bracket_depth(const std::string& s) {
  int depth = 0;
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) quoted = !quoted;
    if (quoted) continue;
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
  }
  return depth;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

// Top-level entries go to a section with an empty name.
std::vector<Section> read_sections(std::istream& in) {
  std::vector<Section> sections(1);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.find('=') == std::string::npos) {
      if (line.back() != ']') fail(number, "unterminated section header");
      sections.push_back({trim(std::string_view(line).substr(1, line.size() - 2)), {}});
      if (sections.back().name.empty()) fail(number, "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(number, "expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string text = trim(std::string_view(line).substr(eq + 1));
    const int start = number;
    while (bracket_depth(text) > 0 && std::getline(in, raw)) {
      ++number;
      text += " " + trim(strip_comment(raw));
    }
    if (key.empty()) fail(start, "empty key");
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) fail(start, "value of '" + key + "' is not a valid literal: " + text);
    for (const auto& e : sections.back().entries)
      if (e.key == key) fail(start, "duplicate key '" + key + "'");
    sections.back().entries.push_back({std::move(key), std::move(value), start});
  }
  return sections;
}

int as_int(const Entry& e) {
  if (!e.value.is_number_integer()) fail(e.line, "'" + e.key + "' must be an integer");
  return e.value.get<int>();
}

std::vector<std::string> as_strings(const Entry& e) {
  if (!e.value.is_array()) fail(e.line, "'" + e.key + "' must be a list of words");
  std::vector<std::string> out;
  for (const auto& v : e.value) {
    if (!v.is_string()) fail(e.line, "'" + e.key + "' must contain only quoted words");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Perm as_perm(const Entry& e) {
  if (!e.value.is_array()) fail(e.line, "'" + e.key + "' must be a list of points");
  std::vector<int> points;
  for (const auto& v : e.value) {
    if (!v.is_number_integer()) fail(e.line, "'" + e.key + "' must contain only integers");
    points.push_back(v.get<int>());
  }
  try {
    return Perm::from_one_based(points);
  } catch (const Error& err) {
    fail(e.line, "'" + e.key + "': " + err.what());
  }
}

struct PermBlock {
  std::optional<Entry> degree;
  std::vector<std::pair<std::string, Perm>> perms;  // file order
  int line = 0;
};

PermBlock read_perms(const std::vector<Entry>& entries) {
  PermBlock block;
  for (const Entry& e : entries) {
    if (e.key == "degree") {
      block.degree = e;
    } else if (e.key.rfind("perm.", 0) == 0) {
      if (e.key.size() == 5) fail(e.line, "empty generator name in '" + e.key + "'");
      block.perms.emplace_back(e.key.substr(5), as_perm(e));
      if (block.line == 0) block.line = e.line;
    }
  }
  return block;
}

// The point degree is the length of the image lists. A declared degree must
// match it, or else the order of the generated group (the index of the
// kernel, i.e. the degree of the regular action).
int checked_degree(const PermBlock& block) {
  if (block.perms.empty()) return block.degree ? as_int(*block.degree) : 1;
  const int points = block.perms.front().second.degree();
  for (const auto& [name, p] : block.perms)
    if (p.degree() != points) fail(block.line, "perm." + name + " has " + std::to_string(p.degree()) + " points, expected " + std::to_string(points));
  if (block.degree) {
    const int declared = as_int(*block.degree);
    if (declared != points) {
      std::vector<Perm> gens;
      for (const auto& kv : block.perms) gens.push_back(kv.second);
      if (static_cast<std::size_t>(declared) != PermGroup::generate(gens, points).order())
        fail(block.degree->line, "degree " + std::to_string(declared) + " matches neither the " + std::to_string(points) +
                                     "-point image lists nor the order of the generated group");
    }
  }
  return points;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace

SubgroupGraph Presentation::subgroup_graph() const {
  const Alphabet a = alphabet();
  if (quotient) return kernel_of_finite_quotient(*quotient, a);
  std::vector<Word> gens;
  for (const auto& s : *subgroup) gens.push_back(parse_word(s, a));
  return SubgroupGraph::build(gens, a);
}

DoubleGroup Presentation::double_group() const {
  const Alphabet a = alphabet();
  std::optional<std::vector<Word>> images;
  if (bar) {
    images.emplace();
    for (const auto& s : *bar) images->push_back(parse_word(s, a));
  }
  return DoubleGroup::over(subgroup_graph(), images);
}

Presentation parse_presentation(std::istream& in) {
  const auto sections = read_sections(in);
  if (sections.size() > 1) throw ParseError("presentation files have no sections ([" + sections[1].name + "])");
  Presentation p;
  bool has_rank = false;
  for (const Entry& e : sections[0].entries) {
    if (e.key == "rank") {
      p.rank = as_int(e);
      has_rank = true;
    } else if (e.key == "subgroup") {
      p.subgroup = as_strings(e);
    } else if (e.key == "bar") {
      p.bar = as_strings(e);
    } else if (e.key != "degree" && e.key.rfind("perm.", 0) != 0) {
      fail(e.line, "unknown key '" + e.key + "'");
    }
  }
  const PermBlock block = read_perms(sections[0].entries);
  const bool has_quotient = !block.perms.empty();
  if (has_quotient == p.subgroup.has_value())
    throw ParseError("exactly one of 'subgroup' or a 'perm.*' quotient block must define C");
  if (!has_quotient && block.degree) fail(block.degree->line, "'degree' without a quotient block");
  if (has_quotient) {
    if (!has_rank) p.rank = static_cast<int>(block.perms.size());
    if (static_cast<int>(block.perms.size()) != p.rank)
      throw ParseError("quotient block has " + std::to_string(block.perms.size()) + " generators but rank is " + std::to_string(p.rank));
    FiniteQuotientMap q;
    q.degree = checked_degree(block);
    for (int i = 0; i < p.rank; ++i) {
      const std::string expected(1, static_cast<char>('a' + i));
      const auto it = std::find_if(block.perms.begin(), block.perms.end(), [&](const auto& kv) { return kv.first == expected; });
      if (it == block.perms.end()) throw ParseError("quotient block is missing perm." + expected);
      q.images.push_back(it->second);
    }
    p.quotient = std::move(q);
  } else if (!has_rank) {
    throw ParseError("missing 'rank'");
  }
  if (p.rank < 1) throw ParseError("rank must be positive");
  if (p.bar && static_cast<int>(p.bar->size()) != p.rank)
    throw ParseError("bar lists " + std::to_string(p.bar->size()) + " images but rank is " + std::to_string(p.rank));
  if (p.quotient) p.quotient->validate(p.alphabet());
  // Surface word syntax errors at load time.
  const Alphabet a = p.alphabet();
  if (p.subgroup)
    for (const auto& s : *p.subgroup) parse_word(s, a);
  if (p.bar)
    for (const auto& s : *p.bar) parse_word(s, a);
  return p;
}

Presentation load_presentation(const std::string& path) {
  auto in = open(path);
  return parse_presentation(in);
}

std::vector<FiniteSolvableGroup> parse_catalog(std::istream& in) {
  const auto sections = read_sections(in);
  if (!sections[0].entries.empty()) fail(sections[0].entries[0].line, "catalog entries must sit inside a [name] section");
  std::vector<FiniteSolvableGroup> out;
  for (std::size_t i = 1; i < sections.size(); ++i) {
    const Section& s = sections[i];
    for (const Entry& e : s.entries)
      if (e.key != "degree" && e.key.rfind("perm.", 0) != 0) fail(e.line, "unknown key '" + e.key + "' in [" + s.name + "]");
    const PermBlock block = read_perms(s.entries);
    const int degree = checked_degree(block);
    std::vector<Perm> gens;
    for (const auto& kv : block.perms) gens.push_back(kv.second);
    out.push_back(FiniteSolvableGroup::make(s.name, degree, std::move(gens)));
  }
  return out;
}

std::vector<FiniteSolvableGroup> load_catalog(const std::string& path) {
  auto in = open(path);
  return parse_catalog(in);
}

}  // namespace amalgam::cli
