#include "postlie/glhopf.hpp"

#include "postlie/parallel.hpp"

namespace postlie {

Poly glp(const TriangleEngine& e, const Poly& A, const Poly& B) {
  Poly r;
  for (const auto& [b, cb] : B.terms()) {
    int m = static_cast<int>(b.size());
    for (const auto& [a, ca] : A.terms()) {
      for_each_split(a, m + 1, [&](const std::vector<Word>& parts) {
        Poly prod = Poly::word(parts[0]);
        for (int j = 0; j < m && !prod.is_zero(); ++j) prod = conc(prod, e.word_on_letter(parts[j + 1], b[j]));
        r.add_scaled(prod, ca * cb);
      });
    }
  }
  return r;
}

namespace {

/// w = w1 v_{i1} w2 ... v_{id} w_{d+1} with the w_j over V0.
void decompose(const Word& w, const std::set<Letter>& V0, std::vector<Word>& segs, std::vector<Letter>& marks) {
  segs.assign(1, {});
  marks.clear();
  for (Letter x : w) {
    if (V0.count(x)) {
      segs.back().push_back(x);
    } else {
      marks.push_back(x);
      segs.emplace_back();
    }
  }
}

Word antipode_word(const Word& w, Q& sign) {
  if (w.size() % 2) sign = -sign;
  return reversed(w);
}

}  // namespace

Poly glp_ihara_fast(const Poly& A, const Word& w, const std::set<Letter>& V0) {
  std::vector<Word> segs;
  std::vector<Letter> marks;
  decompose(w, V0, segs, marks);
  int d = static_cast<int>(marks.size());
  Poly r;
  for (const auto& [a, ca] : A.terms()) {
    for_each_split(a, 2 * d + 1, [&](const std::vector<Word>& parts) {
      Q c = ca;
      Word out = concat(parts[0], segs[0]);
      for (int j = 0; j < d; ++j) {
        Word s = antipode_word(parts[2 * j + 1], c);
        out.insert(out.end(), s.begin(), s.end());
        out.push_back(marks[j]);
        out.insert(out.end(), parts[2 * j + 2].begin(), parts[2 * j + 2].end());
        out.insert(out.end(), segs[j + 1].begin(), segs[j + 1].end());
      }
      r.add(out, c);
    });
  }
  return r;
}

Poly glp_ari_fast(const Poly& A, const Word& w) {
  std::vector<Word> segs;
  std::vector<Letter> marks;
  decompose(w, {0}, segs, marks);
  int d = static_cast<int>(marks.size());
  Poly r;
  for (const auto& [a, ca] : A.terms()) {
    for_each_split(a, 2 * d + 1, [&](const std::vector<Word>& parts) {
      Poly acc = Poly::word(concat(parts[0], segs[0]), ca);
      for (int j = 0; j < d && !acc.is_zero(); ++j) {
        const Word& p = parts[2 * j + 1];
        const Word& q = parts[2 * j + 2];
        Index kp = word_index(p), kq = word_index(q);
        int shift0 = abs_sum(kp) + abs_sum(kq);
        Poly piece;
        for (const auto& lp : lowerings(kp)) {
          Q mp = ari_mult(kp, lp);
          Q c = mp;
          Word s = antipode_word(substitute(p, lp), c);
          for (const auto& lq : lowerings(kq)) {
            Word out = s;
            out.push_back(marks[j] + static_cast<Letter>(shift0 - abs_sum(lp) - abs_sum(lq)));
            Word ql = substitute(q, lq);
            out.insert(out.end(), ql.begin(), ql.end());
            out.insert(out.end(), segs[j + 1].begin(), segs[j + 1].end());
            piece.add(out, c * ari_mult(kq, lq));
          }
        }
        acc = conc(acc, piece);
      }
      r += acc;
    });
  }
  return r;
}

Tensor2 shuffle_bullet(const Tensor2& a, const Tensor2& b) {
  Tensor2 t;
  for (const auto& [k, c] : a.terms())
    for (const auto& [l, d] : b.terms()) {
      Poly s = shuffle_words(k.first, l.first);
      Word right = concat(k.second, l.second);
      for (const auto& [u, x] : s.terms()) t.add(u, right, c * d * x);
    }
  return t;
}

Tensor2 cotr_irr_ihara(const Word& A, const std::set<Letter>& V0) {
  Tensor2 t;
  std::size_t n = A.size();
  if (n == 0) return t;
  for (std::size_t j = 0; j < n; ++j) {
    Word pre(A.begin(), A.begin() + j), post(A.begin() + j + 1, A.end());
    Poly s = shuffle(antipode(Poly::word(pre)), Poly::word(post));
    bool v0 = V0.count(A[j]) > 0;
    for (const auto& [u, c] : s.terms())
      if (!v0 || u.empty()) t.add(u, {A[j]}, c);
  }
  return t;
}

Tensor2 cotr_irr_ari(const Word& A) {
  Tensor2 t;
  std::size_t d = A.size();
  if (d == 0) return t;
  if (d == 1) {
    t.add({}, A, 1);
    return t;
  }
  Index k = word_index(A);
  for (std::size_t i = 0; i < d; ++i) {
    Index khat;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) khat.push_back(k[j]);
    for (int total = 0; total <= k[i] - 1; ++total) {
      for (const auto& l : weak_compositions(total, static_cast<int>(d - 1))) {
        Index raised = khat;
        for (std::size_t j = 0; j < raised.size(); ++j) raised[j] += l[j];
        Q m = ari_mult(raised, khat);
        if (sgn(m) == 0) continue;
        Word pre(raised.begin(), raised.begin() + i), post(raised.begin() + i, raised.end());
        Poly s = shuffle(antipode(Poly::word(pre)), Poly::word(post));
        Word right{static_cast<Letter>(k[i] - total)};
        for (const auto& [u, c] : s.terms()) t.add(u, right, c * m);
      }
    }
  }
  return t;
}

Tensor2 coprod_from_cotr(const Word& A, const std::function<Tensor2(const Word&)>& cotr) {
  std::size_t n = A.size();
  std::vector<Tensor2> G(n + 1);
  G[n].add({}, {}, 1);
  for (std::size_t p = n; p-- > 0;) {
    for (std::size_t q = p + 1; q <= n; ++q) {
      if (G[q].is_zero()) continue;
      Tensor2 c = cotr(Word(A.begin() + p, A.begin() + q));
      if (c.is_zero()) continue;
      G[p] += shuffle_bullet(c, G[q]);
    }
  }
  Tensor2 out;
  for (std::size_t p = 0; p <= n; ++p) {
    Tensor2 head;
    head.add(Word(A.begin(), A.begin() + p), {}, 1);
    out += shuffle_bullet(head, G[p]);
  }
  return out;
}

Tensor2 coprod_I(const Poly& A, const std::set<Letter>& V0) {
  Tensor2 t;
  for (const auto& [w, c] : A.terms())
    t.add_scaled(coprod_from_cotr(w, [&](const Word& u) { return cotr_irr_ihara(u, V0); }), c);
  return t;
}

Tensor2 coprod_I_gon(const Poly& A, const std::set<Letter>& V0) {
  Tensor2 t;
  for (const auto& [w, cw] : A.terms()) {
    std::size_t n = w.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      // endpoints: a virtual start outside V0 and a virtual end inside V0
      std::vector<long> J{-1};
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) J.push_back(static_cast<long>(i));
      J.push_back(static_cast<long>(n));
      auto in_v0 = [&](long pos) {
        if (pos < 0) return false;
        if (pos >= static_cast<long>(n)) return true;
        return V0.count(w[pos]) > 0;
      };
      Poly left = Poly::one();
      Word right;
      for (std::size_t p = 0; p + 1 < J.size() && !left.is_zero(); ++p) {
        Word f(w.begin() + (J[p] + 1), w.begin() + J[p + 1]);
        bool x = in_v0(J[p]), y = in_v0(J[p + 1]);
        Poly piece;
        if (!x && y)
          piece = Poly::word(f);
        else if (x && !y)
          piece = antipode(Poly::word(f));
        else if (f.empty())
          piece = Poly::one();
        left = shuffle(left, piece);
        if (p + 2 < J.size()) right.push_back(w[J[p + 1]]);
      }
      for (const auto& [u, c] : left.terms()) t.add(u, right, c * cw);
    }
  }
  return t;
}

Tensor2 coprod_a(const Poly& A) {
  Tensor2 t;
  for (const auto& [w, c] : A.terms()) t.add_scaled(coprod_from_cotr(w, cotr_irr_ari), c);
  return t;
}

// ---- dualization ----

Dualizer::Dualizer(std::shared_ptr<const TriangleEngine> e, int max_weight) : e_(std::move(e)), max_weight_(max_weight) {}

const Dualizer::Table& Dualizer::glp_table(int wt) const {
  std::lock_guard<std::mutex> lock(mtx_);
  auto it = glp_tables_.find(wt);
  if (it != glp_tables_.end()) return *it->second;
  std::vector<std::pair<Word, Word>> pairs;
  for (int a = 0; a <= wt; ++a)
    for (const auto& w1 : basis_words(a))
      for (const auto& w2 : basis_words(wt - a)) pairs.emplace_back(w1, w2);
  std::vector<Poly> prods(pairs.size());
  parallel_for(pairs.size(), static_cast<int>(std::thread::hardware_concurrency()), [&](std::size_t i) {
    prods[i] = glp(*e_, Poly::word(pairs[i].first), Poly::word(pairs[i].second));
  });
  auto table = std::make_unique<Table>();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (const auto& [c, x] : prods[i].sorted()) (*table)[c].emplace_back(pairs[i].first, pairs[i].second, x);
  return *(glp_tables_[wt] = std::move(table));
}

const Dualizer::Table& Dualizer::tr_table(int wt) const {
  std::lock_guard<std::mutex> lock(mtx_);
  auto it = tr_tables_.find(wt);
  if (it != tr_tables_.end()) return *it->second;
  auto table = std::make_unique<Table>();
  for (Letter b = 0; letter_weight(b) <= wt; ++b)
    for (const auto& w : basis_words(wt - letter_weight(b)))
      for (const auto& [c, x] : e_->word_on_letter(w, b).sorted()) (*table)[c].emplace_back(w, Word{b}, x);
  return *(tr_tables_[wt] = std::move(table));
}

Tensor2 Dualizer::coproduct(const Poly& A) const {
  Tensor2 t;
  for (const auto& [w, c] : A.terms()) {
    int wt = weight(w);
    if (wt > max_weight_) throw WeightBoundError("weight " + std::to_string(wt) + " over bound " + std::to_string(max_weight_));
    const Table& tab = glp_table(wt);
    auto it = tab.find(w);
    if (it == tab.end()) continue;
    for (const auto& [w1, w2, x] : it->second) t.add(w1, w2, x * c);
  }
  return t;
}

Tensor2 Dualizer::cotriangle(const Poly& A) const {
  Tensor2 t;
  for (const auto& [w, c] : A.terms()) {
    int wt = weight(w);
    if (wt > max_weight_) throw WeightBoundError("weight " + std::to_string(wt) + " over bound " + std::to_string(max_weight_));
    if (wt == 0) continue;
    const Table& tab = tr_table(wt);
    auto it = tab.find(w);
    if (it == tab.end()) continue;
    for (const auto& [w1, w2, x] : it->second) t.add(w1, w2, x * c);
  }
  return t;
}

Tensor2 cotr_irr(const Dualizer& d, const Poly& A) {
  const Structure& s = d.engine().structure();
  Tensor2 t;
  switch (s.kind) {
    case Structure::Kind::Ihara:
      for (const auto& [w, c] : A.terms()) t.add_scaled(cotr_irr_ihara(w, s.v0), c);
      return t;
    case Structure::Kind::Ari:
      for (const auto& [w, c] : A.terms()) t.add_scaled(cotr_irr_ari(w), c);
      return t;
    case Structure::Kind::Uri:
      return d.cotriangle(A);
  }
  return t;
}

Tensor2 coprod_dualized(const Dualizer& d, const Poly& A) { return d.coproduct(A); }

// ---- filtrations ----

int ind_max(const Word& w) {
  int m = 0;
  for (Letter x : w) m = std::max(m, static_cast<int>(x));
  return m;
}

int k_level(const Word& w, Letter k) {
  int n = 0;
  for (Letter x : w) n += (x == k);
  return static_cast<int>(w.size()) - n;
}

bool filtration_check(const Word& w, const Poly& result, FiltrationMode mode) {
  if (mode != FiltrationMode::IndMaxLower) throw std::invalid_argument("filtration_check: mode needs a tensor");
  for (const auto& [u, c] : result.terms())
    if (ind_max(u) < ind_max(w)) return false;
  return true;
}

bool filtration_check(const Word& w, const Tensor2& t, FiltrationMode mode) {
  for (const auto& [k, c] : t.terms()) {
    const Word& right = k.second;
    if (mode == FiltrationMode::IndMaxUpper) {
      if (ind_max(right) > ind_max(w)) return false;
    } else if (mode == FiltrationMode::KLevel) {
      int top = std::max(ind_max(w), ind_max(right));
      for (Letter x = 0; static_cast<int>(x) <= top; ++x)
        if (k_level(right, x) > k_level(w, x)) return false;
    } else {
      throw std::invalid_argument("filtration_check: mode needs a polynomial");
    }
  }
  return true;
}

}  // namespace postlie
