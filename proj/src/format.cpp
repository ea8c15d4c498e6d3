// Copyright 2026 The Arrovian Authors
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


#include "arrovian/format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include "arrovian/error.hpp"

namespace arrovian {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw InputError("expected an integer for " + std::string(what) + ", got '" +
                     std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw InputError("expected true or false, got '" + std::string(text) + "'");
}

// Non-blank, non-comment lines with their 1-based line numbers.
class Lines {
 public:
  explicit Lines(std::string_view text) {
    int number = 0;
    while (!text.empty()) {
      const auto eol = text.find('\n');
      const std::string_view line = trim(text.substr(0, eol));
      ++number;
      if (!line.empty() && line.front() != '#') lines_.emplace_back(number, line);
      text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::string_view peek() const { return done() ? std::string_view{} : lines_[pos_].second; }
  std::string_view next() {
    if (done()) throw InputError("unexpected end of input");
    return lines_[pos_++].second;
  }
  /// The value of a `key=value` line.
  std::string_view field(std::string_view key) {
    const std::string_view line = next();
    if (line.substr(0, key.size() + 1) != std::string(key) + "=") {
      fail("expected '" + std::string(key) + "=', got '" + std::string(line) + "'");
    }
    return trim(line.substr(key.size() + 1));
  }
  void expect_done() {
    if (!done()) fail("unexpected trailing line '" + std::string(peek()) + "'");
  }
  [[noreturn]] void fail(const std::string& message) const {
    const int number = pos_ == 0 ? 0 : lines_[std::min(pos_, lines_.size()) - 1].first;
    throw InputError("line " + std::to_string(number) + ": " + message);
  }

 private:
  std::vector<std::pair<int, std::string_view>> lines_;
  std::size_t pos_ = 0;
};

// Splits on `sep` outside of brackets and braces.
std::vector<std::string_view> split_top(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '{' || c == '[' || c == '(') ++depth;
    if (c == '}' || c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(text.substr(start, k - start)));
      start = k + 1;
    }
  }
  parts.push_back(trim(text.substr(start)));
  return parts;
}

std::string_view strip(std::string_view text, char open, char close) {
  text = trim(text);
  if (text.size() < 2 || text.front() != open || text.back() != close) {
    throw InputError("expected '" + std::string(1, open) + "...' " + std::string(1, close) +
                     "', got '" + std::string(text) + "'");
  }
  return trim(text.substr(1, text.size() - 2));
}

std::vector<int> parse_voters(std::string_view inner, int n) {
  std::vector<int> voters;
  if (inner.empty()) return voters;
  for (std::string_view item : split_top(inner, ',')) {
    const int v = parse_int(item, "voter");
    if (v < 1 || v > n) {
      throw InputError("voter " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (std::find(voters.begin(), voters.end(), v - 1) != voters.end()) {
      throw InputError("voter " + std::to_string(v) + " repeated");
    }
    voters.push_back(v - 1);
  }
  return voters;
}

// "{N} -> rhs" split into its two sides.
std::pair<std::string_view, std::string_view> split_arrow(std::string_view line) {
  const auto arrow = line.find("->");
  if (arrow == std::string_view::npos) {
    throw InputError("expected '{N} -> ...', got '" + std::string(line) + "'");
  }
  return {trim(line.substr(0, arrow)), trim(line.substr(arrow + 2))};
}

int read_society(Lines& lines) {
  const int n = parse_int(lines.field("n"), "n");
  check_society(n);
  return n;
}

std::vector<std::vector<bool>> read_rows(Lines& lines, int m) {
  std::vector<std::vector<bool>> rows;
  for (int x = 0; x < m; ++x) {
    const std::string_view row = lines.next();
    if (static_cast<int>(row.size()) != m) lines.fail("relation row must have m entries");
    std::vector<bool> bits;
    for (char c : row) {
      if (c != '0' && c != '1') lines.fail("relation rows contain only 0 and 1");
      bits.push_back(c == '1');
    }
    rows.push_back(std::move(bits));
  }
  return rows;
}

std::string rows_text(const Preorder& p) {
  std::string out;
  for (const auto& row : p.table()) {
    for (bool bit : row) out += bit ? '1' : '0';
    out += '\n';
  }
  return out;
}

DeltaMap read_delta_table(Lines& lines, int n) {
  std::vector<VoterSet> table;
  for (std::uint32_t mask = 0; mask <= VoterSet::all(n).mask; ++mask) {
    const auto [lhs, rhs] = split_arrow(lines.next());
    if (parse_set(lhs, n) != VoterSet{mask}) {
      lines.fail("coalition map lines must follow mask order, expected " +
                 format_set(VoterSet{mask}));
    }
    table.push_back(parse_set(rhs, n));
  }
  return DeltaMap(n, std::move(table));
}

std::string delta_lines(const DeltaMap& delta) {
  std::string out;
  for (std::uint32_t mask = 0; mask < delta.table().size(); ++mask) {
    out += format_set(VoterSet{mask}) + " -> " + format_set(delta.table()[mask]) + "\n";
  }
  return out;
}

DMap read_dmap_table(Lines& lines, const Algebra& algebra) {
  std::vector<VoterSet> generators;
  for (VoterSet member : algebra.members()) {
    const auto [lhs, rhs] = split_arrow(lines.next());
    if (parse_set(lhs, algebra.n()) != member) {
      lines.fail("map lines must list the algebra in mask order, expected " +
                 format_set(member));
    }
    if (rhs.substr(0, 4) != "gen=") lines.fail("expected 'gen={..}'");
    generators.push_back(parse_set(rhs.substr(4), algebra.n()));
  }
  return DMap(algebra, std::move(generators));
}

std::string dmap_lines(const DMap& dmap) {
  std::string out;
  const auto& members = dmap.algebra().members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    out += format_set(members[k]) + " -> gen=" + format_set(dmap.generators()[k]) + "\n";
  }
  return out;
}

SetFilter filter_from_field(std::string_view line, int n) {
  if (line.substr(0, 4) == "gen=") return SetFilter::principal(n, parse_set(line.substr(4), n));
  if (line.substr(0, 8) == "members=") {
    std::vector<VoterSet> members;
    const std::string_view list = trim(line.substr(8));
    if (!list.empty()) {
      for (std::string_view item : split_top(list, ';')) members.push_back(parse_set(item, n));
    }
    return SetFilter(n, members);
  }
  throw InputError("expected 'gen={..}' or 'members=..', got '" + std::string(line) + "'");
}

std::string filter_field(const SetFilter& filter) {
  if (auto gen = filter.generator()) return "gen=" + format_set(*gen);
  std::string out = "members=";
  bool first = true;
  for (VoterSet s : filter.members()) {
    if (!first) out += ";";
    out += format_set(s);
    first = false;
  }
  return out;
}

std::string format_permutation(const Permutation& perm) {
  std::string out = "(";
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(perm[k] + 1);
  }
  return out + ")";
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string format_set(VoterSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

VoterSet parse_set(std::string_view text, int n) {
  const std::vector<int> voters = parse_voters(strip(text, '{', '}'), n);
  return VoterSet::from_indices(voters);
}

std::string format_chain(const Chain& chain) {
  if (chain.empty()) return "{}";
  std::string out;
  for (VoterSet s : chain.sets()) {
    if (!out.empty()) out += "<";
    out += format_set(s);
  }
  return out;
}

Chain parse_chain(std::string_view text, int n) {
  text = trim(text);
  if (text == "{}") return Chain();
  std::vector<VoterSet> sets;
  for (std::string_view item : split_top(text, '<')) sets.push_back(parse_set(item, n));
  return Chain(std::move(sets));
}

std::string format_sequence(const std::vector<int>& sequence) {
  return format_permutation(sequence);
}

std::vector<int> parse_sequence(std::string_view text, int n) {
  return parse_voters(strip(text, '(', ')'), n);
}

std::string format_partition(const std::vector<VoterSet>& blocks) {
  std::string out = "[";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) out += "|";
    out += format_set(blocks[k]);
  }
  return out + "]";
}

std::vector<VoterSet> parse_partition(std::string_view text, int n) {
  std::vector<VoterSet> blocks;
  const std::string_view inner = strip(text, '[', ']');
  if (inner.empty()) return blocks;
  for (std::string_view item : split_top(inner, '|')) blocks.push_back(parse_set(item, n));
  return blocks;
}

std::string format_relation(const Preorder& p) {
  return "m=" + std::to_string(p.m()) + "\n" + rows_text(p);
}

Preorder parse_relation(std::string_view text) {
  Lines lines(text);
  const int m = parse_int(lines.field("m"), "m");
  if (m < 1 || m > kMaxAlternatives) lines.fail("alternative count out of range");
  Preorder p = Preorder::from_table(read_rows(lines, m));
  lines.expect_done();
  return p;
}

std::string format_profile(const Profile& pr) {
  std::string out = "n=" + std::to_string(pr.n()) + "\n";
  // An empty profile still records its alternatives.
  if (pr.n() == 0) out += "m=" + std::to_string(pr.m()) + "\n";
  for (const Preorder& p : pr.orders()) out += "\n" + format_relation(p);
  return out;
}

Profile parse_profile(std::string_view text) {
  Lines lines(text);
  const int n = read_society(lines);
  std::vector<Preorder> orders;
  int m = 0;
  for (int i = 0; i < n || (n == 0 && i == 0); ++i) {
    m = parse_int(lines.field("m"), "m");
    if (m < 1 || m > kMaxAlternatives) lines.fail("alternative count out of range");
    if (n > 0) orders.push_back(Preorder::from_table(read_rows(lines, m)));
  }
  lines.expect_done();
  return Profile(m, std::move(orders));
}

std::string format_delta(const DeltaMap& delta) {
  return "n=" + std::to_string(delta.n()) + "\n" + delta_lines(delta);
}

DeltaMap parse_delta(std::string_view text) {
  Lines lines(text);
  const int n = read_society(lines);
  DeltaMap delta = read_delta_table(lines, n);
  lines.expect_done();
  return delta;
}

std::string format_filter(const SetFilter& filter) {
  return "n=" + std::to_string(filter.n()) + "\n" + filter_field(filter) + "\n";
}

SetFilter parse_filter(std::string_view text) {
  Lines lines(text);
  const int n = read_society(lines);
  SetFilter filter = filter_from_field(lines.next(), n);
  lines.expect_done();
  return filter;
}

std::string format_dmap(const DMap& dmap) {
  return "n=" + std::to_string(dmap.n()) +
         "\npartition=" + format_partition(dmap.algebra().blocks()) + "\n" + dmap_lines(dmap);
}

DMap parse_dmap(std::string_view text) {
  Lines lines(text);
  const int n = read_society(lines);
  const Algebra algebra(n, parse_partition(lines.field("partition"), n));
  DMap dmap = read_dmap_table(lines, algebra);
  lines.expect_done();
  return dmap;
}

std::string format_rule(const RuleSpec& spec) {
  const std::string head = "n=" + std::to_string(spec.n) + "\nrule=";
  return head + std::visit(
                    overloaded{
                        [](const rule::Trivial&) { return std::string("trivial\n"); },
                        [](const rule::Pareto& r) { return "pareto J=" + format_set(r.junta) + "\n"; },
                        [](const rule::Lex& r) { return "lex chain=" + format_chain(r.chain) + "\n"; },
                        [](const rule::StrongLex& r) {
                          return "strong_lex chain=" + format_chain(r.chain) + "\n";
                        },
                        [](const rule::LexSeq& r) {
                          return "lexseq seq=" + format_sequence(r.sequence) + "\n";
                        },
                        [](const rule::Delta& r) { return "delta\n" + delta_lines(r.delta); },
                        [](const rule::Filter& r) { return "filter " + filter_field(r.filter) + "\n"; },
                        [](const rule::Measurable& r) {
                          return "measurable partition=" +
                                 format_partition(r.dmap.algebra().blocks()) + "\n" +
                                 dmap_lines(r.dmap);
                        },
                    },
                    spec.variant);
}

RuleSpec parse_rule(std::string_view text, const std::filesystem::path& base_dir) {
  Lines lines(text);
  const int n = read_society(lines);
  const std::vector<std::string_view> words = split_top(lines.field("rule"), ' ');
  const std::string_view kind = words.front();
  std::map<std::string, std::string_view, std::less<>> args;
  for (std::size_t k = 1; k < words.size(); ++k) {
    if (words[k].empty()) continue;
    const auto eq = words[k].find('=');
    if (eq == std::string_view::npos) lines.fail("expected key=value, got '" + std::string(words[k]) + "'");
    args.emplace(std::string(words[k].substr(0, eq)), words[k].substr(eq + 1));
  }
  std::vector<std::string> used;
  auto arg = [&](const std::string& key) -> std::string_view {
    auto it = args.find(key);
    if (it == args.end()) lines.fail("rule '" + std::string(kind) + "' needs " + key + "=");
    used.push_back(key);
    return it->second;
  };
  auto has = [&](const std::string& key) { return args.count(key) > 0; };

  RuleSpec spec{n, rule::Trivial{}};
  if (kind == "trivial") {
  } else if (kind == "pareto") {
    spec.variant = rule::Pareto{parse_set(arg("J"), n)};
  } else if (kind == "lex") {
    spec.variant = rule::Lex{parse_chain(arg("chain"), n)};
  } else if (kind == "strong_lex") {
    spec.variant = rule::StrongLex{parse_chain(arg("chain"), n)};
  } else if (kind == "lexseq") {
    spec.variant = rule::LexSeq{parse_sequence(arg("seq"), n)};
  } else if (kind == "delta") {
    DeltaMap delta = has("file") ? parse_delta(read_file(base_dir / std::string(arg("file"))))
                                 : read_delta_table(lines, n);
    if (delta.n() != n) lines.fail("coalition map size does not match n");
    spec.variant = rule::Delta{std::move(delta)};
  } else if (kind == "filter") {
    if (has("gen")) {
      spec.variant = rule::Filter{SetFilter::principal(n, parse_set(arg("gen"), n))};
    } else {
      spec.variant = rule::Filter{filter_from_field("members=" + std::string(arg("members")), n)};
    }
  } else if (kind == "measurable") {
    if (has("dmap_file")) {
      DMap dmap = parse_dmap(read_file(base_dir / std::string(arg("dmap_file"))));
      if (dmap.n() != n) lines.fail("coalition map size does not match n");
      if (has("partition") &&
          Algebra(n, parse_partition(arg("partition"), n)) != dmap.algebra()) {
        lines.fail("partition does not match the map file");
      }
      spec.variant = rule::Measurable{std::move(dmap)};
    } else {
      const Algebra algebra(n, parse_partition(arg("partition"), n));
      spec.variant = rule::Measurable{read_dmap_table(lines, algebra)};
    }
  } else {
    lines.fail("unknown rule kind '" + std::string(kind) + "'");
  }
  for (const auto& [key, value] : args) {
    if (std::find(used.begin(), used.end(), key) == used.end()) {
      lines.fail("unexpected argument '" + key + "'");
    }
  }
  lines.expect_done();
  validate_rule(spec);
  return spec;
}

std::string format_axiom_report(const AxiomReport& report) {
  std::string out = "axiom=" + std::string(axiom_name(report.kind)) +
                    " holds=" + (report.holds ? "true" : "false") + "\n";
  if (!report.witness) return out;
  const AxiomWitness& w = *report.witness;
  out += "witness a=" + std::to_string(w.a + 1) + " b=" + std::to_string(w.b + 1) +
         " a2=" + std::to_string(w.a2 + 1) + " b2=" + std::to_string(w.b2 + 1) +
         " perm=" + format_permutation(w.permutation) + "\n";
  for (const Profile& pr : w.profiles) out += "profile\n" + format_profile(pr);
  return out;
}

AxiomReport parse_axiom_report(std::string_view text) {
  Lines lines(text);
  const std::vector<std::string_view> head = split_top(lines.field("axiom"), ' ');
  if (head.size() != 2 || head[1].substr(0, 6) != "holds=") lines.fail("expected 'holds='");
  AxiomReport report{parse_axiom(head[0]), parse_bool(head[1].substr(6)), std::nullopt};
  if (lines.done()) return report;
  const std::vector<std::string_view> words = split_top(lines.next(), ' ');
  if (words.size() != 6 || words[0] != "witness") lines.fail("expected a witness header");
  auto value = [&](std::size_t k, std::string_view key) {
    if (words[k].substr(0, key.size() + 1) != std::string(key) + "=") {
      lines.fail("expected '" + std::string(key) + "='");
    }
    return words[k].substr(key.size() + 1);
  };
  AxiomWitness w;
  w.a = parse_int(value(1, "a"), "a") - 1;
  w.b = parse_int(value(2, "b"), "b") - 1;
  w.a2 = parse_int(value(3, "a2"), "a2") - 1;
  w.b2 = parse_int(value(4, "b2"), "b2") - 1;
  for (int v : parse_voters(strip(value(5, "perm"), '(', ')'), kMaxVoters)) {
    w.permutation.push_back(v);
  }
  // Profiles are delimited by "profile" lines; re-join each chunk for the
  // profile parser.
  std::string chunk;
  bool open = false;
  auto flush = [&] {
    if (open) w.profiles.push_back(parse_profile(chunk));
    chunk.clear();
  };
  while (!lines.done()) {
    const std::string_view line = lines.next();
    if (line == "profile") {
      flush();
      open = true;
    } else if (!open) {
      lines.fail("expected 'profile'");
    } else {
      chunk += std::string(line) + "\n";
    }
  }
  flush();
  report.witness = std::move(w);
  return report;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RuleSpec load_rule(const std::filesystem::path& path) {
  return parse_rule(read_file(path), path.parent_path());
}

std::string render_dot(const DeltaMap& delta) {
  std::string out = "digraph coalitions {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int size = 0; size <= delta.n(); ++size) {
    out += "  { rank=same;";
    for (std::uint32_t mask = 0; mask < delta.table().size(); ++mask) {
      if (VoterSet{mask}.size() == size) out += " \"" + format_set(VoterSet{mask}) + "\";";
    }
    out += " }\n";
  }
  for (std::uint32_t mask = 0; mask < delta.table().size(); ++mask) {
    const VoterSet target = delta.table()[mask];
    if (target == VoterSet{mask}) continue;
    out += "  \"" + format_set(VoterSet{mask}) + "\" -> \"" + format_set(target) + "\";\n";
  }
  return out + "}\n";
}

}  // namespace arrovian
