#include "transdim/dsl.hpp"

#include "transdim/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace transdim {
namespace {

struct Stop {
  std::size_t position;
  std::string message;
};

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  std::size_t pos() const { return pos_; }
  const std::vector<std::string>& expected_at(std::size_t p) const {
    static const std::vector<std::string> none;
    return p == expected_pos_ ? expected_ : none;
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= in_.size();
  }

  [[noreturn]] void fail(std::string message) const { throw Stop{pos_, std::move(message)}; }

  [[noreturn]] void fail_expected(std::string what) {
    note(what);
    fail("expected " + what);
  }

  void note(const std::string& token) {
    if (expected_pos_ != pos_) {
      expected_pos_ = pos_;
      expected_.clear();
    }
    expected_.push_back(token);
  }

  bool accept(char c) {
    skip_ws();
    note(std::string("'") + c + "'");
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < in_.size() && std::isalpha(static_cast<unsigned char>(in_[end]))) ++end;
    return in_.substr(pos_, end - pos_);
  }

  bool accept_word(std::string_view w) {
    if (peek_word() != w) {
      note("'" + std::string(w) + "'");
      return false;
    }
    pos_ += w.size();
    return true;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]));
  }

  std::uint64_t nat() {
    if (!peek_digit()) fail_expected("natural number");
    std::size_t end = pos_;
    while (end < in_.size() && std::isdigit(static_cast<unsigned char>(in_[end]))) ++end;
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(in_.data() + pos_, in_.data() + end, v);
    if (ec != std::errc()) fail("natural number out of range");
    pos_ = end;
    return v;
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = pos_ < in_.size() && in_[pos_] == '-';
    if (neg) ++pos_;
    if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
      pos_ = start;
      fail_expected("rational number");
    }
    std::size_t end = pos_;
    while (end < in_.size() && std::isdigit(static_cast<unsigned char>(in_[end]))) ++end;
    std::size_t after = end;
    while (after < in_.size() && std::isspace(static_cast<unsigned char>(in_[after]))) ++after;
    if (after < in_.size() && in_[after] == '/') {
      std::size_t d = after + 1;
      while (d < in_.size() && std::isspace(static_cast<unsigned char>(in_[d]))) ++d;
      std::size_t dend = d;
      while (dend < in_.size() && std::isdigit(static_cast<unsigned char>(in_[dend]))) ++dend;
      if (dend == d) {
        pos_ = d;
        fail_expected("denominator");
      }
      std::string text = std::string(in_.substr(start, end - start)) + "/" + std::string(in_.substr(d, dend - d));
      pos_ = dend;
      return checked([&] { return parse_rational(text); }, start);
    }
    pos_ = end;
    return checked([&] { return parse_rational(std::string(in_.substr(start, end - start))); }, start);
  }

  template <class F>
  auto checked(F&& f, std::size_t at) -> decltype(f()) {
    try {
      return f();
    } catch (const std::exception& e) {
      throw Stop{at, e.what()};
    }
  }

  // ---- ordinals ----

  Ordinal ord() {
    skip_ws();
    const std::size_t start = pos_;
    Ordinal acc = term();
    while (accept('+')) {
      Ordinal t = term();
      acc = checked([&] { return add(acc, t); }, start);
    }
    return acc;
  }

  Ordinal term() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek_digit()) return Ordinal::finite(nat());
    if (peek_word() != "w") {
      note("ordinal term");
      fail("expected ordinal term");
    }
    ++pos_;
    if (pos_ < in_.size() && in_[pos_] == '_') {
      ++pos_;
      return initial(start);
    }
    Ordinal exponent = Ordinal::finite(1);
    if (accept('^')) exponent = exp();
    std::uint64_t coef = 1;
    if (accept('*')) coef = nat();
    return checked([&] { return Ordinal::omega_power(exponent, coef); }, start);
  }

  Ordinal initial(std::size_t start) {
    Ordinal index;
    if (accept('(')) {
      index = ord();
      expect(')');
    } else {
      index = Ordinal::finite(nat());
    }
    if (index.is_zero()) return Ordinal::omega();
    return checked([&] { return initial_ordinal(index); }, start);
  }

  Ordinal exp() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek_digit()) return Ordinal::finite(nat());
    if (accept('(')) {
      Ordinal o = ord();
      expect(')');
      return o;
    }
    if (peek_word() == "w") {
      ++pos_;
      if (pos_ < in_.size() && in_[pos_] == '_') {
        ++pos_;
        return initial(start);
      }
      Ordinal e = Ordinal::finite(1);
      if (accept('^')) e = exp();
      return checked([&] { return Ordinal::omega_power(e); }, start);
    }
    note("exponent");
    fail("expected exponent");
  }

  // ---- spaces ----

  SpaceRef expr() {
    SpaceRef e = primary();
    while (accept_word("with")) {
      const std::size_t at = pos_;
      Declarations d = attrs();
      e = checked([&] { return space::with(e, d); }, at);
    }
    return e;
  }

  Declarations attrs() {
    expect('{');
    Declarations d;
    do {
      attr(d);
    } while (accept(','));
    expect('}');
    return d;
  }

  void attr(Declarations& d) {
    const std::size_t at = (skip_ws(), pos_);
    auto once = [&](auto& slot, const char* name) {
      if (slot) throw Stop{at, std::string("attribute '") + name + "' declared twice"};
    };
    if (accept_word("separable")) {
      once(d.separable, "separable");
      d.separable = true;
    } else if (accept_word("compact")) {
      once(d.compact, "compact");
      d.compact = true;
    } else if (accept_word("weight")) {
      expect('=');
      if (!accept_word("aleph")) fail("expected 'aleph'");
      expect('(');
      Ordinal idx = ord();
      expect(')');
      once(d.weight, "weight");
      d.weight = Aleph(idx);
    } else if (accept_word("hd")) {
      expect('=');
      Rational h = rational();
      once(d.hd, "hd");
      d.hd = h;
    } else {
      fail("expected attribute");
    }
  }

  std::vector<SpaceRef> list(bool allow_repeat, bool& repeats) {
    std::vector<SpaceRef> parts{expr()};
    while (accept(',')) {
      if (allow_repeat) {
        skip_ws();
        if (in_.substr(pos_, 3) == "...") {
          pos_ += 3;
          repeats = true;
          break;
        }
        note("'...'");
      }
      parts.push_back(expr());
    }
    expect(')');
    return parts;
  }

  SpaceRef primary() {
    const std::string word(peek_word());
    static const char* const kHeads[] = {"empty", "point", "I",    "cantor", "S",   "C",    "Dsub",
                                         "prod",  "cunion", "lfunion", "aug", "excise", "alex", "sub"};
    if (std::find(std::begin(kHeads), std::end(kHeads), word) == std::end(kHeads)) {
      note("space expression");
      fail("expected space expression");
    }
    pos_ += word.size();
    if (word == "empty") return space::empty();
    if (word == "point") return space::point();
    if (word == "I") {
      std::uint64_t n = 1;
      if (accept('^')) n = nat();
      return space::cube(n);
    }
    expect('(');
    if (word == "cantor") {
      const std::size_t at = (skip_ws(), pos_);
      Rational m = rational();
      expect(')');
      return checked([&] { return space::fat_cantor(m); }, at);
    }
    if (word == "S" || word == "C" || word == "Dsub") {
      Ordinal a = ord();
      expect(')');
      if (word == "S") return space::smirnov(a);
      if (word == "C") return space::smirnov_cantor(a);
      return space::dense_subset(a);
    }
    if (word == "prod" || word == "excise") {
      SpaceRef a = expr();
      expect(',');
      SpaceRef b = expr();
      expect(')');
      return word == "prod" ? space::product(a, b) : space::excision(a, b);
    }
    if (word == "aug" || word == "sub") {
      SpaceRef a = expr();
      expect(')');
      return word == "aug" ? space::augment(a) : space::subspace(a);
    }
    bool repeats = false;
    if (word == "cunion") return space::closed_union(list(false, repeats));
    std::vector<SpaceRef> parts = list(true, repeats);
    if (word == "lfunion") return space::locally_finite_union(std::move(parts), repeats);
    return space::alexandrov_sum(std::move(parts), repeats);
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t expected_pos_ = static_cast<std::size_t>(-1);
  std::vector<std::string> expected_;
};

ParseFailure to_failure(const Parser& p, const Stop& s) {
  ParseFailure f;
  f.position = s.position;
  f.expected = p.expected_at(s.position);
  std::sort(f.expected.begin(), f.expected.end());
  f.expected.erase(std::unique(f.expected.begin(), f.expected.end()), f.expected.end());
  f.message = s.message;
  return f;
}

void write_list(std::ostream& os, const std::vector<SpaceRef>& parts, bool repeats) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ", ";
    os << pretty(*parts[i]);
  }
  if (repeats) os << ", ...";
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string ParseFailure::to_string() const {
  std::ostringstream os;
  os << "parse error at position " << position << ": " << message;
  if (!expected.empty()) {
    os << " (expected one of:";
    for (const std::string& e : expected) os << ' ' << e;
    os << ')';
  }
  return os.str();
}

ParseResult parse(std::string_view input) {
  Parser p(input);
  try {
    SpaceRef e = p.expr();
    if (!p.at_end()) {
      p.note("end of input");
      p.fail("unexpected trailing input");
    }
    return {e};
  } catch (const Stop& s) {
    return {to_failure(p, s)};
  }
}

Ordinal parse_ordinal(std::string_view input) {
  Parser p(input);
  try {
    Ordinal o = p.ord();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return o;
  } catch (const Stop& s) {
    throw ValidationError("invalid ordinal '" + std::string(input) + "' at offset " + std::to_string(s.position) +
                          ": " + s.message);
  }
}

std::string pretty(const SpaceExpr& e) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const node::Empty&) { os << "empty"; },
                 [&](const node::Point&) { os << "point"; },
                 [&](const node::Cube& c) { os << "I^" << c.n; },
                 [&](const node::FatCantor& c) { os << "cantor(" << to_string(c.measure) << ')'; },
                 [&](const node::Smirnov& s) { os << "S(" << s.alpha.to_string() << ')'; },
                 [&](const node::SmirnovCantor& s) { os << "C(" << s.alpha.to_string() << ')'; },
                 [&](const node::DenseSubset& s) { os << "Dsub(" << s.alpha.to_string() << ')'; },
                 [&](const node::Product& p) { os << "prod(" << pretty(*p.left) << ", " << pretty(*p.right) << ')'; },
                 [&](const node::ClosedUnion& u) {
                   os << "cunion(";
                   write_list(os, u.parts, false);
                   os << ')';
                 },
                 [&](const node::LocallyFiniteUnion& u) {
                   os << "lfunion(";
                   write_list(os, u.parts, u.repeats);
                   os << ')';
                 },
                 [&](const node::Augment& a) { os << "aug(" << pretty(*a.core) << ')'; },
                 [&](const node::Excision& x) {
                   os << "excise(" << pretty(*x.complement) << ", " << pretty(*x.closed) << ')';
                 },
                 [&](const node::AlexandrovSum& u) {
                   os << "alex(";
                   write_list(os, u.parts, u.repeats);
                   os << ')';
                 },
                 [&](const node::Subspace& s) { os << "sub(" << pretty(*s.parent) << ')'; },
             },
             e.node());
  const Declarations& d = e.declared();
  if (!d.empty()) {
    std::vector<std::string> attrs;
    if (d.separable && *d.separable) attrs.push_back("separable");
    if (d.compact && *d.compact) attrs.push_back("compact");
    if (d.weight) attrs.push_back("weight=aleph(" + d.weight->index().to_string() + ")");
    if (d.hd) attrs.push_back("hd=" + to_string(*d.hd));
    if (!attrs.empty()) {
      os << " with {";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << '}';
    }
  }
  return os.str();
}

}  // namespace transdim
