#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reesgor/corpus.hpp"
#include "reesgor/error.hpp"
#include "reesgor/parse.hpp"

namespace reesgor {

/// A polynomial as written in an input file, with its position.
struct SourceText {
  std::string text;
  int line = 0;
  int column = 0;
  bool operator==(const SourceText& o) const { return text == o.text; }
};

/// Line-oriented input:
///
///   ring <name>
///   vars x:2 y:1
///   char 32003
///   ideal f1, f2
///   params p1, p2
///   power n
///   mode both shimoda
///
/// Blank lines and lines starting with '#' are ignored. `char 0` means the
/// rationals.
struct InputDocument {
  std::string name;
  std::vector<std::pair<std::string, int>> vars;
  std::uint32_t characteristic = 32003;
  std::vector<SourceText> ideal;
  std::vector<SourceText> params;
  std::optional<int> power;
  std::vector<std::string> mode;

  bool operator==(const InputDocument&) const = default;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline int parse_int(const std::string& s, int line, int col, long long lo, long long hi) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, col, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, col + static_cast<int>(used), "trailing characters after integer");
  if (v < lo || v > hi) throw ParseError(line, col, "integer " + s + " out of range");
  return static_cast<int>(v);
}

/// Comma-separated list; each item keeps its column.
inline std::vector<SourceText> split_list(const std::string& rest, int line, int col0) {
  std::vector<SourceText> out;
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t comma = rest.find(',', start);
    std::size_t end = comma == std::string::npos ? rest.size() : comma;
    std::string raw = rest.substr(start, end - start);
    std::size_t lead = raw.find_first_not_of(" \t");
    std::string item = trim(raw);
    if (item.empty()) throw ParseError(line, col0 + static_cast<int>(start), "empty list item");
    out.push_back({item, line, col0 + static_cast<int>(start + lead)});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

inline InputDocument parse_document(const std::string& text) {
  InputDocument doc;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool seen_ring = false, seen_vars = false;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos || raw[b] == '#') continue;
    std::size_t ke = raw.find_first_of(" \t", b);
    std::string key = raw.substr(b, ke == std::string::npos ? std::string::npos : ke - b);
    std::size_t rb = ke == std::string::npos ? raw.size() : raw.find_first_not_of(" \t", ke);
    if (rb == std::string::npos) rb = raw.size();
    std::string rest = detail::trim(raw.substr(rb));
    const int col = static_cast<int>(rb) + 1;
    if (rest.empty()) throw ParseError(line, static_cast<int>(raw.size()) + 1, "'" + key + "' needs a value");
    if (key == "ring") {
      if (!detail::is_identifier(rest)) throw ParseError(line, col, "ring name must be an identifier");
      doc.name = rest;
      seen_ring = true;
    } else if (key == "vars") {
      std::istringstream vs(rest);
      std::string tok;
      std::size_t pos = 0;
      while (vs >> tok) {
        pos = rest.find(tok, pos);
        const int tcol = col + static_cast<int>(pos);
        pos += tok.size();
        auto c = tok.find(':');
        std::string name = tok.substr(0, c);
        if (!detail::is_identifier(name)) throw ParseError(line, tcol, "bad variable name '" + name + "'");
        for (const auto& v : doc.vars)
          if (v.first == name) throw ParseError(line, tcol, "duplicate variable '" + name + "'");
        int w = 1;
        if (c != std::string::npos)
          w = detail::parse_int(tok.substr(c + 1), line, tcol + static_cast<int>(c) + 1, 1, 1 << 20);
        doc.vars.emplace_back(name, w);
      }
      seen_vars = true;
    } else if (key == "char") {
      doc.characteristic = static_cast<std::uint32_t>(detail::parse_int(rest, line, col, 0, (1LL << 31) - 1));
    } else if (key == "ideal") {
      doc.ideal = detail::split_list(rest, line, col);
    } else if (key == "params") {
      doc.params = detail::split_list(rest, line, col);
    } else if (key == "power") {
      doc.power = detail::parse_int(rest, line, col, 1, 64);
    } else if (key == "mode") {
      std::istringstream ms(rest);
      std::string tok;
      while (ms >> tok) {
        if (tok != "criteria" && tok != "oracle" && tok != "both" && tok != "shimoda" && tok != "buchsbaum")
          throw ParseError(line, col + static_cast<int>(rest.find(tok)), "unknown mode '" + tok + "'");
        doc.mode.push_back(tok);
      }
    } else {
      throw ParseError(line, static_cast<int>(b) + 1, "unknown keyword '" + key + "'");
    }
  }
  if (!seen_ring) throw ParseError(line + 1, 1, "missing 'ring' line");
  if (!seen_vars) throw ParseError(line + 1, 1, "missing 'vars' line");
  if (doc.params.empty()) throw ParseError(line + 1, 1, "missing 'params' line");
  return doc;
}

namespace detail {

inline std::string join(const std::vector<SourceText>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i].text;
  return s;
}

}  // namespace detail

inline std::string print_document(const InputDocument& doc) {
  std::ostringstream out;
  out << "ring " << doc.name << "\n";
  out << "vars";
  for (const auto& [n, w] : doc.vars) out << " " << n << ":" << w;
  out << "\n";
  out << "char " << doc.characteristic << "\n";
  if (!doc.ideal.empty()) out << "ideal " << detail::join(doc.ideal) << "\n";
  out << "params " << detail::join(doc.params) << "\n";
  if (doc.power) out << "power " << *doc.power << "\n";
  if (!doc.mode.empty()) {
    out << "mode";
    for (const auto& m : doc.mode) out << " " << m;
    out << "\n";
  }
  return out.str();
}

/// Builds the ring and parameters; polynomial errors point into the file.
template <class F>
Instance<F> build_instance(const InputDocument& doc, const F& field, Limits limits = {}) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& [n, w] : doc.vars) {
    names.push_back(n);
    weights.push_back(w);
  }
  auto sp = make_ring(field, names, weights);
  auto parse_all = [&](const std::vector<SourceText>& items) {
    std::vector<Poly<F>> out;
    for (const auto& s : items) {
      Poly<F> p = parse_poly(sp, s.text, s.line, s.column);
      if (!p.is_zero() && !p.is_homogeneous()) throw ParseError(s.line, s.column, "polynomial is not homogeneous");
      out.push_back(p);
    }
    return out;
  };
  auto rels = parse_all(doc.ideal);
  auto params = parse_all(doc.params);
  auto ring = make_presented_ring<F>(doc.name, sp, rels, limits);
  for (auto& p : params) p = ring->reduce(p);
  return {ring, params};
}

/// The document describing an instance; `examples` regenerates corpus files
/// through this.
template <class F>
InputDocument document_from_instance(const Instance<F>& inst, std::uint32_t characteristic,
                                     std::optional<int> power = std::nullopt, std::vector<std::string> mode = {}) {
  InputDocument doc;
  doc.name = inst.ring->name();
  const auto& sp = inst.ring->ring();
  for (int i = 0; i < sp->nvars(); ++i) doc.vars.emplace_back(sp->names()[i], sp->weights()[i]);
  doc.characteristic = characteristic;
  for (const auto& r : inst.ring->relations()) doc.ideal.push_back({r.to_string()});
  for (const auto& p : inst.params) doc.params.push_back({p.to_string()});
  doc.power = power;
  doc.mode = std::move(mode);
  return doc;
}

/// Corpus instance names, in file order.
inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"hochster_roberts", "two_planes",        "regular_base",
                                                 "idealization_xy",  "idealization_x2y3", "two_planes_squares"};
  return names;
}

template <class F>
Instance<F> corpus_instance(const std::string& name, const F& field = F{}) {
  auto base = make_ring(field, {"x", "y"}, {1, 1});
  if (name == "hochster_roberts") return build_hochster_roberts<F>(field);
  if (name == "two_planes") return build_two_planes<F>(field);
  if (name == "regular_base") return build_regular_base<F>(field);
  if (name == "idealization_xy")
    return build_idealization<F>(name, base, {parse_poly(base, "x"), parse_poly(base, "y")});
  if (name == "idealization_x2y3")
    return build_idealization<F>(name, base, {parse_poly(base, "x^2"), parse_poly(base, "y^3")});
  if (name == "two_planes_squares") {
    auto tp = build_two_planes<F>(field);
    auto a = make_presented_ring<F>(name, tp.ring->ring(), tp.ring->relations());
    return {a, {parse_poly(a->ring(), "x^2 + u^2"), parse_poly(a->ring(), "y^2 + v^2")}};
  }
  fail(ErrorKind::InvalidArgument, "unknown example '" + name + "'");
}

/// Flat key=value report. Narrative lines start with "# ".
class ReportDocument {
 public:
  void set(const std::string& key, const std::string& value) {
    for (auto& kv : entries_)
      if (kv.first == key) {
        kv.second = value;
        return;
      }
    entries_.emplace_back(key, value);
  }
  void set(const std::string& key, bool v) { set(key, std::string(v ? "true" : "false")); }
  void set(const std::string& key, const char* v) { set(key, std::string(v)); }
  template <class T>
    requires std::is_integral_v<T>
  void set(const std::string& key, T v) {
    set(key, std::to_string(v));
  }
  void narrate(const std::string& line) { narrative_.push_back(line); }

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& kv : entries_)
      if (kv.first == key) return kv.second;
    return std::nullopt;
  }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  const std::vector<std::string>& narrative() const { return narrative_; }

  std::string str() const {
    std::string s;
    for (const auto& [k, v] : entries_) s += k + "=" + v + "\n";
    for (const auto& n : narrative_) s += "# " + n + "\n";
    return s;
  }

  static ReportDocument parse(const std::string& text) {
    ReportDocument r;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      if (raw.empty()) continue;
      if (raw.rfind("# ", 0) == 0) {
        r.narrative_.push_back(raw.substr(2));
        continue;
      }
      auto eq = raw.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(line, 1, "expected key=value");
      r.entries_.emplace_back(raw.substr(0, eq), raw.substr(eq + 1));
    }
    return r;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> narrative_;
};

}  // namespace reesgor
