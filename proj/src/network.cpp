#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace crn {

std::uint32_t Complex::coefficient(std::uint32_t species) const {
  for (const auto& [sp, coeff] : entries)
    if (sp == species) return coeff;
  return 0;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

class CrnParser {
 public:
  CrnParser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  Crn run() {
    std::size_t pos = 0;
    unsigned line_no = 0;
    while (pos <= text_.size()) {
      const auto nl = text_.find('\n', pos);
      std::string_view line = text_.substr(pos, nl == std::string_view::npos ? text_.size() - pos : nl - pos);
      ++line_no;
      parse_line(line, line_no);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    finish();
    return std::move(crn_);
  }

 private:
  [[noreturn]] void fail(unsigned line, unsigned col, const std::string& what) const {
    throw ParseError(source_, line, col, what);
  }

  std::uint32_t species_id(const std::string& name, unsigned line, unsigned col) {
    auto it = species_index_.find(name);
    if (it != species_index_.end()) return it->second;
    if (!is_name_start(name[0])) fail(line, col, "invalid species name '" + name + "'");
    const auto id = static_cast<std::uint32_t>(crn_.species_.size());
    crn_.species_.push_back(name);
    species_index_.emplace(name, id);
    return id;
  }

  struct Cursor {
    std::string_view line;
    unsigned line_no;
    std::size_t i = 0;

    void skip_ws() {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    }
    bool eol() {
      skip_ws();
      return i >= line.size();
    }
    unsigned col() const { return static_cast<unsigned>(i) + 1; }
  };

  // complex := '0' | term ('+' term)*, term := [int ['*']] name
  Complex parse_complex(Cursor& cur) {
    Complex out;
    std::map<std::uint32_t, std::uint32_t> coeffs;
    cur.skip_ws();
    if (cur.i < cur.line.size() && cur.line[cur.i] == '0') {
      ++cur.i;
      cur.skip_ws();
      if (cur.i < cur.line.size() && is_name_char(cur.line[cur.i]))
        fail(cur.line_no, cur.col(), "unexpected text after the zero complex");
      return out;
    }
    while (true) {
      cur.skip_ws();
      unsigned long coeff = 1;
      const unsigned term_col = cur.col();
      if (cur.i < cur.line.size() && std::isdigit(static_cast<unsigned char>(cur.line[cur.i]))) {
        std::size_t start = cur.i;
        while (cur.i < cur.line.size() && std::isdigit(static_cast<unsigned char>(cur.line[cur.i]))) ++cur.i;
        if (cur.i < cur.line.size() && (cur.line[cur.i] == '.' || cur.line[cur.i] == ','))
          fail(cur.line_no, cur.col(), "stoichiometric coefficients must be integers");
        coeff = std::stoul(std::string(cur.line.substr(start, cur.i - start)));
        if (coeff == 0)
          fail(cur.line_no, term_col, "stoichiometric coefficients must be positive");
        cur.skip_ws();
        if (cur.i < cur.line.size() && cur.line[cur.i] == '*') ++cur.i;
        cur.skip_ws();
      }
      if (cur.i >= cur.line.size() || !is_name_start(cur.line[cur.i])) {
        if (cur.i < cur.line.size() && cur.line[cur.i] == '-')
          fail(cur.line_no, cur.col(), "stoichiometric coefficients must be non-negative");
        fail(cur.line_no, cur.col(), "expected a species name");
      }
      std::size_t start = cur.i;
      const unsigned name_col = cur.col();
      while (cur.i < cur.line.size() && is_name_char(cur.line[cur.i])) ++cur.i;
      std::string name(cur.line.substr(start, cur.i - start));
      coeffs[species_id(name, cur.line_no, name_col)] += static_cast<std::uint32_t>(coeff);

      cur.skip_ws();
      if (cur.i < cur.line.size() && cur.line[cur.i] == '+') {
        ++cur.i;
        continue;
      }
      break;
    }
    out.entries.assign(coeffs.begin(), coeffs.end());
    return out;
  }

  void parse_species_line(Cursor& cur) {
    while (!cur.eol()) {
      if (!is_name_start(cur.line[cur.i]))
        fail(cur.line_no, cur.col(), "expected a species name");
      std::size_t start = cur.i;
      const unsigned col = cur.col();
      while (cur.i < cur.line.size() && is_name_char(cur.line[cur.i])) ++cur.i;
      std::string name(cur.line.substr(start, cur.i - start));
      if (species_index_.contains(name))
        fail(cur.line_no, col, "duplicate species '" + name + "'");
      species_id(name, cur.line_no, col);
    }
  }

  void add_reaction(const std::string& label, Complex initial, Complex terminal,
                    unsigned line, unsigned col) {
    if (labels_.contains(label))
      fail(line, col, "duplicate reaction label '" + label + "'");
    if (initial == terminal)
      fail(line, col, "reaction '" + label + "' has identical initial and terminal complexes");
    labels_.insert(label);
    PendingReaction pr;
    pr.label = label;
    pr.initial = crn_.intern_complex(std::move(initial));
    pr.terminal = crn_.intern_complex(std::move(terminal));
    pending_.push_back(std::move(pr));
  }

  void parse_line(std::string_view raw, unsigned line_no) {
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    Cursor cur{line, line_no};
    if (cur.eol()) return;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      fail(line_no, cur.col(), "expected 'label:' or 'species:' at the start of the line");

    // Leading "species:" declares order; otherwise it is a reaction label.
    std::string head(line.substr(0, colon));
    while (!head.empty() && (head.back() == ' ' || head.back() == '\t')) head.pop_back();
    std::size_t head_start = 0;
    while (head_start < head.size() && (head[head_start] == ' ' || head[head_start] == '\t')) ++head_start;
    head = head.substr(head_start);
    if (head.empty()) fail(line_no, 1, "missing label before ':'");
    for (char c : head)
      if (!is_label_char(c))
        fail(line_no, static_cast<unsigned>(head_start) + 1,
             "invalid label '" + head + "'");

    cur.i = colon + 1;
    if (head == "species") {
      parse_species_line(cur);
      return;
    }

    Complex lhs = parse_complex(cur);
    cur.skip_ws();
    bool reversible = false;
    if (cur.line.substr(cur.i, 2) == "->") {
      cur.i += 2;
    } else if (cur.line.substr(cur.i, 3) == "<=>") {
      cur.i += 3;
      reversible = true;
    } else {
      fail(line_no, cur.col(), "expected '->' or '<=>'");
    }
    Complex rhs = parse_complex(cur);
    if (!cur.eol()) fail(line_no, cur.col(), "unexpected trailing text");

    const unsigned col = 1;
    if (reversible) {
      // Sugar: one reversible arrow is two independent irreversible reactions.
      add_reaction(head, lhs, rhs, line_no, col);
      add_reaction(head + "_r", std::move(rhs), std::move(lhs), line_no, col);
    } else {
      add_reaction(head, std::move(lhs), std::move(rhs), line_no, col);
    }
  }

  void finish() {
    if (pending_.empty()) throw ParseError(source_, 1, 1, "no reactions in input");
    for (auto& pr : pending_) {
      Reaction r;
      r.label = std::move(pr.label);
      r.initial = pr.initial;
      r.terminal = pr.terminal;
      r.rate = crn_.symtab_.add(SymKind::RateConst, "k_" + r.label);
      crn_.reactions_.push_back(std::move(r));
    }
    for (const auto& name : crn_.species_)
      crn_.symtab_.add(SymKind::Conc, "c_" + name);
  }

  struct PendingReaction {
    std::string label;
    std::uint32_t initial, terminal;
  };

  std::string_view text_;
  std::string source_;
  Crn crn_;
  std::map<std::string, std::uint32_t> species_index_;
  std::set<std::string> labels_;
  std::vector<PendingReaction> pending_;
};

Crn Crn::parse_text(std::string_view text, std::string source_name) {
  return CrnParser(text, std::move(source_name)).run();
}

Crn Crn::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

std::uint32_t Crn::intern_complex(Complex c) {
  for (std::uint32_t i = 0; i < complexes_.size(); ++i)
    if (complexes_[i] == c) return i;
  complexes_.push_back(std::move(c));
  return static_cast<std::uint32_t>(complexes_.size() - 1);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string format_complex(const Crn& crn, const Complex& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [sp, coeff] : c.entries) {
    if (!first) out += " + ";
    if (coeff != 1) out += std::to_string(coeff) + " ";
    out += crn.species_name(sp);
    first = false;
  }
  return out;
}

}  // namespace

std::string Crn::serialize() const {
  std::string out = "species:";
  for (const auto& name : species_) out += " " + name;
  out += "\n";
  for (const auto& r : reactions_) {
    out += r.label + ": " + format_complex(*this, complexes_[r.initial]) + " -> " +
           format_complex(*this, complexes_[r.terminal]) + "\n";
  }
  return out;
}

bool Crn::structurally_equal(const Crn& other) const {
  if (species_ != other.species_) return false;
  if (!(complexes_ == other.complexes_)) return false;
  if (reactions_.size() != other.reactions_.size()) return false;
  for (std::size_t r = 0; r < reactions_.size(); ++r) {
    const auto& a = reactions_[r];
    const auto& b = other.reactions_[r];
    if (a.label != b.label || a.initial != b.initial || a.terminal != b.terminal ||
        a.rate != b.rate)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Lookups

std::optional<std::uint32_t> Crn::species_index(std::string_view name) const {
  for (std::uint32_t i = 0; i < species_.size(); ++i)
    if (species_[i] == name) return i;
  return std::nullopt;
}

std::uint32_t Crn::require_species(std::string_view name) const {
  auto i = species_index(name);
  if (!i) throw DomainError("unknown species '" + std::string(name) + "'");
  return *i;
}

std::optional<std::uint32_t> Crn::reaction_index(std::string_view label) const {
  for (std::uint32_t r = 0; r < reactions_.size(); ++r)
    if (reactions_[r].label == label) return r;
  return std::nullopt;
}

Sym Crn::ensure_total(const std::string& name) {
  if (auto s = symtab_.lookup(name)) {
    if (s->kind != SymKind::TotalAmount)
      throw std::invalid_argument("symbol '" + name + "' is not a total amount");
    return *s;
  }
  return symtab_.add(SymKind::TotalAmount, name);
}

Sym Crn::fresh_total(const std::string& base) {
  return symtab_.fresh(SymKind::TotalAmount, base);
}

// ---------------------------------------------------------------------------
// Species relations

bool Crn::interacts(std::uint32_t i, std::uint32_t j) const {
  if (i == j) return false;
  for (const auto& c : complexes_)
    if (c.involves(i) && c.involves(j)) return true;
  return false;
}

bool Crn::produces(std::uint32_t i, std::uint32_t j) const {
  for (const auto& r : reactions_)
    if (complexes_[r.initial].involves(i) && complexes_[r.terminal].involves(j)) return true;
  return false;
}

bool Crn::ultimately_produces(std::uint32_t i, std::uint32_t j) const {
  std::vector<std::uint32_t> all(species_.size());
  std::iota(all.begin(), all.end(), 0);
  return ultimately_produces_via(i, j, all);
}

bool Crn::ultimately_produces_via(std::uint32_t i, std::uint32_t j,
                                  const std::vector<std::uint32_t>& via) const {
  std::vector<bool> allowed(species_.size(), false);
  for (auto sp : via) allowed.at(sp) = true;
  std::vector<bool> queued(species_.size(), false);
  std::queue<std::uint32_t> frontier;
  frontier.push(i);
  while (!frontier.empty()) {
    const std::uint32_t u = frontier.front();
    frontier.pop();
    for (std::uint32_t v = 0; v < species_.size(); ++v) {
      if (!produces(u, v)) continue;
      if (v == j) return true;
      if (allowed[v] && !queued[v]) {
        queued[v] = true;
        frontier.push(v);
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Linkage classes

std::vector<std::vector<std::uint32_t>> Crn::linkage_classes() const {
  std::vector<std::uint32_t> parent(complexes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& r : reactions_) {
    auto a = find(r.initial), b = find(r.terminal);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
  for (std::uint32_t c = 0; c < complexes_.size(); ++c) classes[find(c)].push_back(c);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<std::uint32_t>> Crn::strong_linkage_classes() const {
  // Tarjan on the complex digraph.
  const std::size_t n = complexes_.size();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& r : reactions_) adj[r.initial].push_back(r.terminal);

  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> sccs;
  int counter = 0;

  std::function<void(std::uint32_t)> strongconnect = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : adj[v]) {
      if (index[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::uint32_t> comp;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      sccs.push_back(std::move(comp));
    }
  };
  for (std::uint32_t v = 0; v < n; ++v)
    if (index[v] < 0) strongconnect(v);
  std::sort(sccs.begin(), sccs.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return sccs;
}

bool Crn::terminal_strong_linkage_check() const {
  const auto sccs = strong_linkage_classes();
  std::vector<std::uint32_t> scc_of(complexes_.size());
  for (std::uint32_t s = 0; s < sccs.size(); ++s)
    for (auto c : sccs[s]) scc_of[c] = s;

  std::vector<bool> terminal(sccs.size(), true);
  for (const auto& r : reactions_)
    if (scc_of[r.initial] != scc_of[r.terminal]) terminal[scc_of[r.initial]] = false;

  for (const auto& linkage : linkage_classes()) {
    unsigned terminal_count = 0;
    std::set<std::uint32_t> seen;
    for (auto c : linkage)
      if (seen.insert(scc_of[c]).second && terminal[scc_of[c]]) ++terminal_count;
    if (terminal_count != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Mass action

Monomial Crn::complex_monomial(std::uint32_t ci) const {
  std::vector<Monomial::Factor> factors;
  for (const auto& [sp, coeff] : complexes_.at(ci).entries)
    factors.push_back({conc(sp), coeff});
  return Monomial::from_factors(std::move(factors));
}

Poly Crn::steady_state_poly(std::uint32_t species) const {
  std::vector<Term> terms;
  for (const auto& r : reactions_) {
    const long net = static_cast<long>(complexes_[r.terminal].coefficient(species)) -
                     static_cast<long>(complexes_[r.initial].coefficient(species));
    if (net == 0) continue;
    Monomial mono = Monomial::of(r.rate) * complex_monomial(r.initial);
    terms.push_back({std::move(mono), Rational(net)});
  }
  return Poly::from_terms(std::move(terms));
}

std::vector<Poly> Crn::steady_state_polys() const {
  std::vector<Poly> out;
  out.reserve(species_.size());
  for (std::uint32_t i = 0; i < species_.size(); ++i) out.push_back(steady_state_poly(i));
  return out;
}

}  // namespace crn
