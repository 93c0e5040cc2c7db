#include "mtfa/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mtfa/error.hpp"

namespace mtfa {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Splits on commas that are not nested inside braces or parentheses.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '{' || ch == '(') ++depth;
    if (ch == '}' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Strips a matching pair of delimiters, or throws.
std::string_view unwrap(std::string_view s, char open, char close, int line, const char* what) {
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw FormatError(line, std::string("malformed ") + what + " '" + std::string(s) + "'");
  }
  return s.substr(1, s.size() - 2);
}

TapeSet parse_tape_set(std::string_view text, int tapes, int line) {
  TapeSet out = 0;
  for (const auto& part : split_top(unwrap(text, '{', '}', line, "tape set"))) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw FormatError(line, "bad tape number '" + part + "'");
    }
    if (v < 1 || v > tapes) throw FormatError(line, "tape " + std::to_string(v) + " out of range");
    out |= 1u << (v - 1);
  }
  return out;
}

int parse_int(std::string_view text, int line, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(std::string(text), &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw FormatError(line, std::string("bad ") + what + " '" + std::string(text) + "'");
}

PaddedSymbol parse_symbol(const Alphabet& a, std::string_view text, int tapes, int line) {
  std::vector<std::string> parts;
  if (!text.empty() && text.front() == '(') {
    parts = split_top(unwrap(text, '(', ')', line, "tuple label"));
  } else {
    parts.emplace_back(text);
  }
  if (parts.size() != static_cast<std::size_t>(tapes)) {
    throw FormatError(line, "label '" + std::string(text) + "' needs " + std::to_string(tapes) + " entries");
  }
  PaddedSymbol out;
  for (const auto& p : parts) {
    auto tok = trim(p);
    if (tok == kPadToken) {
      out.push_back(kPad);
    } else if (auto l = a.find(tok)) {
      out.push_back(*l);
    } else {
      throw FormatError(line, "unknown letter '" + std::string(tok) + "'");
    }
  }
  if (std::all_of(out.begin(), out.end(), [](Letter l) { return l == kPad; })) {
    throw FormatError(line, "the all-$ tuple is not a label");
  }
  return out;
}

struct StateDecl {
  int line;
  std::string name;
  bool start = false;
  bool accept = false;
  bool final = false;
  std::optional<int> cls;
  std::optional<Sort> sort;
};

StateDecl parse_state(const Line& l, int tapes) {
  if (l.tokens.size() < 2) throw FormatError(l.number, "state line needs a name");
  StateDecl d;
  d.line = l.number;
  d.name = l.tokens[1];
  for (std::size_t i = 2; i < l.tokens.size(); ++i) {
    const std::string& tok = l.tokens[i];
    if (tok == "start") {
      d.start = true;
    } else if (tok == "accept") {
      d.accept = true;
    } else if (tok == "final" || tok == "sort=final") {
      d.final = true;
    } else if (tok.rfind("class=", 0) == 0) {
      const int c = parse_int(std::string_view(tok).substr(6), l.number, "class");
      if (c < 1 || c > tapes) throw FormatError(l.number, "class " + std::to_string(c) + " out of range");
      d.cls = c - 1;
    } else if (tok.rfind("sort=", 0) == 0) {
      std::string_view body = std::string_view(tok).substr(5);
      const auto colon = body.find(':');
      if (colon == std::string_view::npos) throw FormatError(l.number, "sort must look like i:{v,...}");
      const int tape = parse_int(body.substr(0, colon), l.number, "sort tape");
      if (tape < 1 || tape > tapes) throw FormatError(l.number, "sort tape out of range");
      d.sort = Sort{tape - 1, parse_tape_set(body.substr(colon + 1), tapes, l.number), false};
    } else {
      throw FormatError(l.number, "unknown state attribute '" + tok + "'");
    }
  }
  return d;
}

// The label token of a trans line may contain spaces inside parentheses;
// glue tokens until the parentheses balance. Returns index after the label.
std::size_t take_label(const Line& l, std::string& label) {
  if (l.tokens.size() < 3) throw FormatError(l.number, "trans line needs source, label and target");
  std::size_t i = 2;
  label = l.tokens[i++];
  auto balance = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '(') - std::count(s.begin(), s.end(), ')');
  };
  while (balance(label) > 0 && i < l.tokens.size()) label += l.tokens[i++];
  if (balance(label) != 0) throw FormatError(l.number, "unbalanced parentheses in label");
  return i;
}

template <class Machine>
State lookup(const Machine& m, const std::string& name, int line) {
  if (auto s = m.find_state(name)) return *s;
  throw FormatError(line, "unknown state '" + name + "'");
}

Letter parse_async_label(const Alphabet& a, const std::string& label, int line) {
  if (label == kPadToken) return kPad;
  if (auto l = a.find(label)) return *l;
  throw FormatError(line, "unknown letter '" + label + "'");
}

void need_plain_trans(const Line& l, std::size_t after_label) {
  if (after_label + 1 != l.tokens.size()) throw FormatError(l.number, "trans line must be: trans <src> <label> <dst>");
}

void reject_attrs(const StateDecl& d, bool cls, bool sort, bool final) {
  if (!cls && d.cls) throw FormatError(d.line, "class= is not allowed for this kind");
  if (!sort && d.sort) throw FormatError(d.line, "sort= is not allowed for this kind");
  if (!final && d.final) throw FormatError(d.line, "final is only allowed in sorted machines");
}

AnyMachine build(const std::string& kind, int tapes, const Alphabet& alphabet, const std::vector<StateDecl>& states,
                 const std::vector<Line>& trans, int& current) {
  if (kind == "sync" || kind == "fsa") {
    SyncAutomaton m(tapes, alphabet);
    for (const auto& d : states) {
      current = d.line;
      reject_attrs(d, false, false, false);
      m.add_state(d.name, d.start, d.accept);
    }
    for (const auto& l : trans) {
      current = l.number;
      std::string label;
      const auto next = take_label(l, label);
      need_plain_trans(l, next);
      const State src = lookup(m, l.tokens[1], l.number);
      const State dst = lookup(m, l.tokens[next], l.number);
      if (label == kEpsToken) m.add_epsilon(src, dst);
      else m.add_transition(src, parse_symbol(alphabet, label, tapes, l.number), dst);
    }
    return m;
  }
  if (kind == "semisorted") {
    SemiSortedAsync m(tapes, alphabet);
    for (const auto& d : states) {
      current = d.line;
      reject_attrs(d, true, false, false);
      if (!d.cls) throw FormatError(d.line, "state '" + d.name + "' needs class=");
      m.add_state(d.name, *d.cls, d.start, d.accept);
    }
    for (const auto& l : trans) {
      current = l.number;
      std::string label;
      need_plain_trans(l, take_label(l, label));
      m.add_transition(lookup(m, l.tokens[1], l.number), parse_async_label(alphabet, label, l.number),
                       lookup(m, l.tokens[3], l.number));
    }
    current = 0;
    m.validate();
    return m;
  }
  if (kind == "sorted") {
    SortedAsync m(tapes, alphabet);
    for (const auto& d : states) {
      current = d.line;
      reject_attrs(d, false, true, true);
      if (d.final == d.sort.has_value()) throw FormatError(d.line, "state '" + d.name + "' needs exactly one of sort= or final");
      if (d.accept && !d.final) throw FormatError(d.line, "only the final state accepts in a sorted machine");
      m.add_state(d.name, d.final ? Sort::make_final() : *d.sort, d.start);
    }
    for (const auto& l : trans) {
      current = l.number;
      std::string label;
      need_plain_trans(l, take_label(l, label));
      m.add_transition(lookup(m, l.tokens[1], l.number), parse_async_label(alphabet, label, l.number),
                       lookup(m, l.tokens[3], l.number));
    }
    current = 0;
    try {
      m.validate();
    } catch (const ValidationError& e) {
      // Point at the arrow or state the message names.
      const std::string what = e.what();
      for (const auto& l : trans) {
        if (what.find("arrow " + l.tokens[1] + " --" + l.tokens[2] + "--> " + l.tokens[3]) != std::string::npos) current = l.number;
      }
      for (const auto& d : states) {
        if (current == 0 && what.find("'" + d.name + "'") != std::string::npos) current = d.line;
      }
      throw;
    }
    return m;
  }
  if (kind == "saa") {
    SAA m(tapes, alphabet);
    for (const auto& d : states) {
      current = d.line;
      reject_attrs(d, true, false, false);
      if (!d.cls) throw FormatError(d.line, "state '" + d.name + "' needs class=");
      m.add_state(d.name, *d.cls, d.start, d.accept);
    }
    for (const auto& l : trans) {
      current = l.number;
      std::string label;
      need_plain_trans(l, take_label(l, label));
      const State src = lookup(m, l.tokens[1], l.number);
      const State dst = lookup(m, l.tokens[3], l.number);
      if (label == kEpsToken) m.add_epsilon(src, dst);
      else m.add_transition(src, parse_async_label(alphabet, label, l.number), dst);
    }
    return m;
  }
  if (kind == "faa") {
    FAA m(tapes, alphabet);
    for (const auto& d : states) {
      current = d.line;
      reject_attrs(d, false, false, false);
      m.add_state(d.name, d.start, d.accept);
    }
    for (const auto& l : trans) {
      current = l.number;
      std::string label;
      const auto next = take_label(l, label);
      std::string rest;
      for (std::size_t i = next; i < l.tokens.size(); ++i) rest += l.tokens[i];
      const auto arrow = rest.find("->");
      if (rest.rfind("filters=", 0) != 0 || arrow == std::string::npos) {
        throw FormatError(l.number, "FAA trans line must be: trans <src> <tuple> filters={{..}} -> {<dst>,...}");
      }
      std::set<Filter> filters;
      for (const auto& f : split_top(unwrap(std::string_view(rest).substr(8, arrow - 8), '{', '}', l.number, "filter list"))) {
        filters.insert(parse_tape_set(trim(f), tapes, l.number));
      }
      std::set<State> targets;
      for (const auto& t : split_top(unwrap(std::string_view(rest).substr(arrow + 2), '{', '}', l.number, "target list"))) {
        targets.insert(lookup(m, std::string(trim(t)), l.number));
      }
      m.add_move(lookup(m, l.tokens[1], l.number), parse_symbol(alphabet, label, tapes, l.number), std::move(targets),
                 std::move(filters));
    }
    return m;
  }
  throw FormatError(0, "unknown kind '" + kind + "'");
}

}  // namespace

AnyMachine parse_machine(std::string_view text) {
  std::optional<std::string> kind;
  std::optional<int> tapes;
  std::optional<std::vector<std::string>> letters;
  std::vector<std::pair<int, std::vector<std::string>>> inv;
  std::vector<Line> state_lines;
  std::vector<Line> trans_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view body = raw;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    auto tokens = split_ws(body);
    if (tokens[0] == "state") {
      state_lines.push_back({number, std::move(tokens)});
      continue;
    }
    if (tokens[0] == "trans") {
      trans_lines.push_back({number, std::move(tokens)});
      continue;
    }
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw FormatError(number, "expected a directive, state or trans line");
    const std::string key{trim(body.substr(0, colon))};
    auto values = split_ws(body.substr(colon + 1));
    if (!state_lines.empty() || !trans_lines.empty()) {
      throw FormatError(number, "directive '" + key + "' after states or transitions");
    }
    if (key == "kind") {
      if (kind) throw FormatError(number, "kind given twice");
      if (values.size() != 1) throw FormatError(number, "kind takes one value");
      static const std::set<std::string> kinds{"sync", "fsa", "semisorted", "sorted", "faa", "saa"};
      if (kinds.count(values[0]) == 0) throw FormatError(number, "unknown kind '" + values[0] + "'");
      kind = values[0];
    } else if (key == "tapes") {
      if (tapes) throw FormatError(number, "tapes given twice");
      if (values.size() != 1) throw FormatError(number, "tapes takes one value");
      tapes = parse_int(values[0], number, "tape count");
      if (*tapes < 1 || *tapes > 30) throw FormatError(number, "tape count must be between 1 and 30");
    } else if (key == "alphabet") {
      if (letters) throw FormatError(number, "alphabet given twice");
      for (const auto& v : values) {
        if (!Alphabet::is_valid_token(v)) throw FormatError(number, "invalid letter '" + v + "'");
      }
      letters = std::move(values);
    } else if (key == "inv") {
      if (values.empty() || values.size() % 2 != 0) throw FormatError(number, "inv takes pairs of letters");
      inv.emplace_back(number, std::move(values));
    } else {
      throw FormatError(number, "unknown directive '" + key + "'");
    }
  }
  if (!kind) throw FormatError(0, "missing 'kind:' directive");
  if (!letters) throw FormatError(0, "missing 'alphabet:' directive");
  if (!tapes) {
    if (*kind != "fsa") throw FormatError(0, "missing 'tapes:' directive");
    tapes = 1;
  }
  if (*kind == "fsa" && *tapes != 1) throw FormatError(0, "fsa machines have one tape");

  Alphabet alphabet;
  try {
    alphabet = Alphabet(*letters);
  } catch (const Error& e) {
    throw FormatError(0, e.what());
  }
  for (const auto& [line, values] : inv) {
    for (std::size_t i = 0; i < values.size(); i += 2) {
      auto a = alphabet.find(values[i]);
      auto b = alphabet.find(values[i + 1]);
      if (!a || !b) throw FormatError(line, "inv names a letter outside the alphabet");
      try {
        alphabet.set_inverse(*a, *b);
      } catch (const Error& e) {
        throw FormatError(line, e.what());
      }
    }
  }

  std::vector<StateDecl> states;
  for (const auto& l : state_lines) states.push_back(parse_state(l, *tapes));
  int current = 0;
  try {
    return build(*kind, *tapes, alphabet, states, trans_lines, current);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(current, e.what());
  }
}

AnyMachine load_machine(const std::filesystem::path& path) { return parse_machine(read_file(path)); }

namespace {

std::string filter_text(Filter f, int tapes) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < tapes; ++i) {
    if (!(f & (1u << i))) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

template <class Machine>
std::vector<State> by_name(const Machine& m) {
  std::vector<State> order(m.num_states());
  for (State s = 0; s < order.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&](State a, State b) { return m.name(a) < m.name(b); });
  return order;
}

void header(std::ostringstream& out, std::string_view kind, int tapes, const Alphabet& a) {
  out << "kind: " << kind << "\ntapes: " << tapes << "\nalphabet:";
  for (const auto& l : a.letters()) out << ' ' << l;
  out << '\n';
  for (Letter l = 0; l < static_cast<Letter>(a.size()); ++l) {
    auto inv = a.inverse(l);
    if (inv && *inv >= l) out << "inv: " << a.token(l) << ' ' << a.token(*inv) << '\n';
  }
  out << '\n';
}

std::string symbol_text(const Alphabet& a, const PaddedSymbol& sym) {
  if (sym.size() == 1) return a.token(sym[0]);
  return a.spell_symbol(sym);
}

struct TransLine {
  std::string src, label, dst, extra;
  bool operator<(const TransLine& o) const {
    return std::tie(src, label, dst, extra) < std::tie(o.src, o.label, o.dst, o.extra);
  }
};

void emit(std::ostringstream& out, std::vector<TransLine> lines) {
  std::sort(lines.begin(), lines.end());
  if (!lines.empty()) out << '\n';
  for (const auto& t : lines) {
    out << "trans " << t.src << ' ' << t.label;
    if (!t.dst.empty()) out << ' ' << t.dst;
    out << t.extra << '\n';
  }
}

}  // namespace

std::string print_machine(const AnyMachine& any) {
  std::ostringstream out;
  std::vector<TransLine> lines;
  if (const auto* m = std::get_if<SyncAutomaton>(&any)) {
    header(out, "sync", m->tapes(), m->alphabet());
    for (State s : by_name(*m)) {
      out << "state " << m->name(s) << (m->is_start(s) ? " start" : "") << (m->is_accept(s) ? " accept" : "") << '\n';
      for (const auto& [sym, targets] : m->transitions(s)) {
        for (State t : targets) lines.push_back({m->name(s), symbol_text(m->alphabet(), sym), m->name(t), ""});
      }
      for (State t : m->epsilon(s)) lines.push_back({m->name(s), std::string(kEpsToken), m->name(t), ""});
    }
  } else if (const auto* m = std::get_if<SemiSortedAsync>(&any)) {
    header(out, "semisorted", m->tapes(), m->alphabet());
    for (State s : by_name(*m)) {
      out << "state " << m->name(s) << (m->start() == s ? " start" : "") << (m->is_accept(s) ? " accept" : "")
          << " class=" << m->class_of(s) + 1 << '\n';
      for (const auto& [label, t] : m->transitions(s)) {
        lines.push_back({m->name(s), m->alphabet().token(label), m->name(t), ""});
      }
    }
  } else if (const auto* m = std::get_if<SortedAsync>(&any)) {
    header(out, "sorted", m->tapes(), m->alphabet());
    for (State s : by_name(*m)) {
      const Sort& sort = m->sort_of(s);
      out << "state " << m->name(s) << (m->start() == s ? " start" : "");
      if (sort.final) {
        out << " sort=final\n";
      } else {
        out << " sort=" << sort.tape + 1 << ':' << filter_text(sort.consumed, m->tapes()) << '\n';
      }
      for (const auto& [label, t] : m->transitions(s)) {
        lines.push_back({m->name(s), m->alphabet().token(label), m->name(t), ""});
      }
    }
  } else if (const auto* m = std::get_if<SAA>(&any)) {
    header(out, "saa", m->tapes(), m->alphabet());
    for (State s : by_name(*m)) {
      out << "state " << m->name(s) << (m->is_start(s) ? " start" : "") << (m->is_accept(s) ? " accept" : "")
          << " class=" << m->class_of(s) + 1 << '\n';
      for (const auto& [label, targets] : m->transitions(s)) {
        for (State t : targets) lines.push_back({m->name(s), m->alphabet().token(label), m->name(t), ""});
      }
      for (State t : m->epsilon(s)) lines.push_back({m->name(s), std::string(kEpsToken), m->name(t), ""});
    }
  } else if (const auto* m = std::get_if<FAA>(&any)) {
    header(out, "faa", m->tapes(), m->alphabet());
    for (State s : by_name(*m)) {
      out << "state " << m->name(s) << (m->is_start(s) ? " start" : "") << (m->is_accept(s) ? " accept" : "") << '\n';
      for (const auto& [sym, mv] : m->moves(s)) {
        std::string extra = " filters={";
        bool first = true;
        for (Filter f : mv.filters) {
          if (!first) extra += ',';
          extra += filter_text(f, m->tapes());
          first = false;
        }
        extra += "} -> {";
        std::vector<std::string> names;
        for (State t : mv.targets) names.push_back(m->name(t));
        std::sort(names.begin(), names.end());
        for (std::size_t i = 0; i < names.size(); ++i) extra += (i ? "," : "") + names[i];
        extra += "}";
        lines.push_back({m->name(s), m->alphabet().spell_symbol(sym), "", extra});
      }
    }
  }
  emit(out, std::move(lines));
  return out.str();
}

WordTuple parse_tuple(const Alphabet& alphabet, std::string_view text) {
  text = trim(text);
  std::vector<std::string> parts;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw FormatError(0, "malformed tuple '" + std::string(text) + "'");
    parts = split_top(text.substr(1, text.size() - 2));
    if (parts.empty()) parts.emplace_back();
  } else {
    parts.emplace_back(text);
  }
  WordTuple out;
  for (const auto& p : parts) {
    try {
      out.push_back(alphabet.parse_word(trim(p)));
    } catch (const Error& e) {
      throw FormatError(0, e.what());
    }
  }
  return out;
}

StructureCandidate parse_bundle(std::string_view text, const std::filesystem::path& base_dir) {
  std::optional<std::vector<std::string>> letters;
  std::vector<std::pair<int, std::vector<std::string>>> inv;
  std::optional<std::pair<int, std::string>> acceptor_file;
  std::map<std::string, std::pair<int, std::string>> multiplier_files;

  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view body = raw;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw FormatError(number, "expected 'key: value'");
    const auto key = split_ws(body.substr(0, colon));
    const auto values = split_ws(body.substr(colon + 1));
    if (key.size() == 1 && key[0] == "alphabet") {
      if (letters) throw FormatError(number, "alphabet given twice");
      letters = values;
    } else if (key.size() == 1 && key[0] == "inv") {
      if (values.empty() || values.size() % 2 != 0) throw FormatError(number, "inv takes pairs of letters");
      inv.emplace_back(number, values);
    } else if (key.size() == 1 && key[0] == "acceptor") {
      if (values.size() != 1) throw FormatError(number, "acceptor takes one file name");
      if (acceptor_file) throw FormatError(number, "acceptor given twice");
      acceptor_file = {number, values[0]};
    } else if (key.size() == 2 && key[0] == "multiplier") {
      if (values.size() != 1) throw FormatError(number, "multiplier takes one file name");
      if (!multiplier_files.emplace(key[1], std::make_pair(number, values[0])).second) {
        throw FormatError(number, "multiplier for '" + key[1] + "' given twice");
      }
    } else {
      throw FormatError(number, "unknown bundle key '" + std::string(trim(body.substr(0, colon))) + "'");
    }
  }
  if (!letters) throw FormatError(0, "bundle is missing 'alphabet:'");
  if (!acceptor_file) throw FormatError(0, "bundle is missing 'acceptor:'");

  Alphabet alphabet;
  try {
    alphabet = Alphabet(*letters);
    for (const auto& [line, values] : inv) {
      for (std::size_t i = 0; i < values.size(); i += 2) {
        auto a = alphabet.find(values[i]);
        auto b = alphabet.find(values[i + 1]);
        if (!a || !b) throw FormatError(line, "inv names a letter outside the alphabet");
        alphabet.set_inverse(*a, *b);
      }
    }
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(0, e.what());
  }

  auto load = [&](const std::pair<int, std::string>& entry) {
    const auto path = base_dir / entry.second;
    try {
      return load_machine(path);
    } catch (const FormatError& e) {
      throw FormatError(entry.first, path.string() + ": " + e.what());
    }
  };
  auto acceptor = load(*acceptor_file);
  auto* sync = std::get_if<SyncAutomaton>(&acceptor);
  if (sync == nullptr || sync->tapes() != 1) {
    throw FormatError(acceptor_file->first, "acceptor must be a one-tape sync or fsa machine");
  }
  auto as_multiplier = [&](const std::string& key) {
    auto it = multiplier_files.find(key);
    if (it == multiplier_files.end()) throw FormatError(0, "bundle has no multiplier for '" + key + "'");
    auto m = load(it->second);
    if (auto* semi = std::get_if<SemiSortedAsync>(&m)) return *semi;
    if (auto* sorted = std::get_if<SortedAsync>(&m)) return sorted_to_semisorted(*sorted);
    throw FormatError(it->second.first, "multiplier '" + key + "' must be semisorted or sorted");
  };
  std::vector<SemiSortedAsync> multipliers;
  for (const auto& tok : alphabet.letters()) multipliers.push_back(as_multiplier(tok));
  auto eps = as_multiplier(std::string(kEpsToken));
  for (const auto& [key, entry] : multiplier_files) {
    if (key != kEpsToken && !alphabet.find(key)) throw FormatError(entry.first, "multiplier for unknown letter '" + key + "'");
  }
  try {
    return StructureCandidate::make(alphabet, *sync, std::move(multipliers), std::move(eps));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(0, e.what());
  }
}

StructureCandidate load_bundle(const std::filesystem::path& path) {
  return parse_bundle(read_file(path), path.parent_path());
}

}  // namespace mtfa
