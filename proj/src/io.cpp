#include "postlie/io.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace postlie {

ParseError::ParseError(std::size_t pos, const std::string& msg)
    : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}

namespace {

using LetterReader = std::function<Letter(const std::string&, std::size_t&)>;

struct Parser {
  const std::string& s;
  const LetterReader& letter;
  char letter_tag;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool digit() const { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }

  mpz_class integer() {
    std::size_t b = i;
    if (!digit()) throw ParseError(i, "expected digits");
    while (digit()) ++i;
    return mpz_class(s.substr(b, i - b));
  }

  Word word() {
    Word w;
    if (i < s.size() && s[i] == '1' && (i + 1 == s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      ++i;
      return w;
    }
    for (;;) {
      if (i >= s.size() || s[i] != letter_tag)
        throw ParseError(i, std::string("expected '") + letter_tag + "' or '1'");
      w.push_back(letter(s, i));
      if (i < s.size() && s[i] == '.') {
        ++i;
        continue;
      }
      return w;
    }
  }

  Poly parse() {
    Poly p;
    skip();
    if (i >= s.size()) throw ParseError(i, "empty input");
    bool first = true;
    while (true) {
      skip();
      if (i >= s.size()) break;
      Q sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
        skip();
      } else if (!first) {
        throw ParseError(i, "expected '+' or '-'");
      }
      first = false;
      Q coeff = 1;
      Word w;
      if (digit()) {
        std::size_t start = i;
        mpz_class num = integer();
        mpz_class den = 1;
        if (i < s.size() && s[i] == '/') {
          ++i;
          den = integer();
          if (den == 0) throw ParseError(start, "zero denominator");
        }
        if (i < s.size() && s[i] == '*') {
          coeff = Q(num, den);
          coeff.canonicalize();
          ++i;
          w = word();
        } else if (den == 1 && num == 1 && (i == s.size() || s[i] != '.')) {
          // "1" alone is the empty word
        } else {
          coeff = Q(num, den);
          coeff.canonicalize();
        }
      } else {
        w = word();
      }
      p.add(w, sign * coeff);
      skip();
    }
    return p;
  }
};

Letter read_v(const std::string& s, std::size_t& i) {
  std::size_t at = i++;
  std::size_t b = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (b == i) throw ParseError(i, "expected letter index after 'v'");
  if (i - b > 9) throw ParseError(at, "letter index too large");
  return static_cast<Letter>(std::stoul(s.substr(b, i - b)));
}

Letter read_c(const std::string& s, std::size_t& i) {
  std::size_t at = i++;
  auto num = [&]() {
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) throw ParseError(i, "expected digits");
    if (i - b > 6) throw ParseError(b, "index too large");
    return std::stoi(s.substr(b, i - b));
  };
  int k = num();
  if (i >= s.size() || s[i] != '_') throw ParseError(i, "expected '_'");
  ++i;
  int m = num();
  if (k < 1) throw ParseError(at, "C_{k,m} needs k >= 1");
  return c_code({k, m});
}

template <class WordFmt>
std::string format_terms(const std::vector<std::pair<Word, Q>>& ts, WordFmt fmt) {
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : ts) {
    Q a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << a.get_str() << "*";
    os << fmt(w);
  }
  return os.str();
}

}  // namespace

Poly parse_poly(const std::string& s) {
  LetterReader r = read_v;
  return Parser{s, r, 'v'}.parse();
}

BiPoly parse_bipoly(const std::string& s) {
  LetterReader r = read_c;
  return Parser{s, r, 'C'}.parse();
}

std::set<Letter> parse_letter_set(const std::string& s) {
  std::set<Letter> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
    if (i >= s.size()) break;
    if (s[i] == 'v') ++i;
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i || i - b > 9) throw ParseError(b, "expected a letter index");
    out.insert(static_cast<Letter>(std::stoul(s.substr(b, i - b))));
    if (i < s.size() && s[i] != ',' && s[i] != ' ') throw ParseError(i, "expected ','");
  }
  if (out.empty()) throw ParseError(0, "empty letter set");
  return out;
}

std::string format_poly(const Poly& p) { return format_terms(p.sorted(), word_to_string); }

std::string format_bipoly(const BiPoly& p) {
  // order by the BiLetter sequences so the output does not depend on the letter coding
  auto ts = p.sorted();
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    auto la = c_letters(a.first), lb = c_letters(b.first);
    if (la.size() != lb.size()) return la.size() < lb.size();
    for (std::size_t i = 0; i < la.size(); ++i) {
      if (la[i].k != lb[i].k) return la[i].k < lb[i].k;
      if (la[i].m != lb[i].m) return la[i].m < lb[i].m;
    }
    return false;
  });
  return format_terms(ts, biword_to_string);
}

std::string format_tensor(const Tensor2& t) {
  auto ts = t.sorted();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ts) {
    Q a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << a.get_str() << "*";
    os << word_to_string(k.first) << " (x) " << word_to_string(k.second);
  }
  return os.str();
}

nlohmann::ordered_json poly_to_json(const Poly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : p.sorted()) terms.push_back({{"word", w}, {"coeff", c.get_str()}});
  return {{"terms", terms}};
}

Poly poly_from_json(const nlohmann::ordered_json& j) {
  Poly p;
  for (const auto& t : j.at("terms")) {
    Q c(t.at("coeff").get<std::string>());
    c.canonicalize();
    p.add(t.at("word").get<Word>(), c);
  }
  return p;
}

nlohmann::ordered_json tensor_to_json(const Tensor2& t) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : t.sorted())
    terms.push_back({{"left", k.first}, {"right", k.second}, {"coeff", c.get_str()}});
  return {{"terms", terms}};
}

nlohmann::ordered_json bipoly_to_json(const BiPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : p.sorted()) {
    nlohmann::ordered_json letters = nlohmann::ordered_json::array();
    for (const auto& l : c_letters(w)) letters.push_back({l.k, l.m});
    terms.push_back({{"word", letters}, {"coeff", c.get_str()}});
  }
  return {{"terms", terms}};
}

nlohmann::ordered_json bimould_to_json(const Bimould& A) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int d = 0; d <= A.depth(); ++d) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : A[d].terms()) {
      std::vector<int> xe(d, 0), ye(d, 0);
      for (std::size_t i = 0; i < e.size(); ++i) (i % 2 ? ye : xe).at(i / 2) = e[i];
      terms.push_back({{"xexp", xe}, {"yexp", ye}, {"coeff", c.get_str()}});
    }
    out.push_back({{"depth", d}, {"terms", terms}});
  }
  return out;
}

Bimould bimould_from_json(const nlohmann::ordered_json& j) {
  Bimould A;
  for (const auto& comp : j) {
    int d = comp.at("depth").get<int>();
    MPoly p;
    for (const auto& t : comp.at("terms")) {
      auto xe = t.at("xexp").get<std::vector<int>>(), ye = t.at("yexp").get<std::vector<int>>();
      if (static_cast<int>(xe.size()) != d || static_cast<int>(ye.size()) != d)
        throw std::invalid_argument("bimould json: exponent length differs from depth");
      MPoly::Exp e(2 * d, 0);
      for (int i = 0; i < d; ++i) {
        e[2 * i] = xe[i];
        e[2 * i + 1] = ye[i];
      }
      Q c(t.at("coeff").get<std::string>());
      c.canonicalize();
      p.add(e, c);
    }
    A.add(d, p);
  }
  return A;
}

}  // namespace postlie
