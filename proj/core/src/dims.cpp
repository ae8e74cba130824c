#include "rigx/dims.hpp"

#include <algorithm>

namespace rigx {

std::vector<Vec> sparse_row_choices(std::size_t k, std::size_t t, unsigned p) {
  std::vector<Vec> out;
  Vec v(k, 0);
  // Base-p counter with the first coordinate most significant: lexicographic.
  while (true) {
    if (hamming_weight(v) <= t) out.push_back(v);
    std::size_t j = k;
    while (j > 0 && ++v[j - 1] == p) v[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

std::uint64_t sparse_generator_count(std::size_t m, std::size_t k, std::size_t t, unsigned p) {
  std::uint64_t per_row = 0;
  for (std::size_t i = 0; i <= std::min(t, k); ++i)
    per_row = detail::sat_add(per_row,
                              detail::sat_mul(detail::binomial(k, i), detail::sat_pow(p - 1, i)));
  return detail::sat_pow(per_row, m);
}

namespace {

// Odometer over row-choice indices; rows [fixed, m) advance, row 0 most
// significant. Returns false after the last combination.
bool advance(std::vector<std::size_t>& idx, std::size_t fixed, std::size_t radix) {
  for (std::size_t i = idx.size(); i-- > fixed;) {
    if (++idx[i] < radix) return true;
    idx[i] = 0;
  }
  return false;
}

void load_rows(FieldMatrix& g, const std::vector<Vec>& choices, const std::vector<std::size_t>& idx) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Vec& c = choices[idx[i]];
    auto dst = g.row_mut(i);
    std::copy(c.begin(), c.end(), dst.begin());
  }
}

}  // namespace

std::uint64_t enumerate_sparse_generators(std::size_t m, std::size_t k, std::size_t t, unsigned p,
                                          const std::function<bool(const FieldMatrix&)>& visit,
                                          const SearchConfig& cfg) {
  check_budget("enumerate_sparse_generators", sparse_generator_count(m, k, t, p), cfg);
  const auto choices = sparse_row_choices(k, t, p);
  std::vector<std::size_t> idx(m, 0);
  FieldMatrix g(p, m, k);
  std::uint64_t visited = 0;
  do {
    load_rows(g, choices, idx);
    ++visited;
    if (!visit(g)) break;
  } while (advance(idx, 0, choices.size()));
  return visited;
}

// ------------------------------------------------------------------- inner

namespace {

struct InnerChunk {
  std::size_t best = 0;
  FieldMatrix arg;
  bool any = false;
};

}  // namespace

DimWitness inner_dimension(const FieldMatrix& m, std::size_t t, const SearchConfig& cfg) {
  const unsigned p = m.p();
  const auto v = SubspaceBasis::column_span(m);
  const std::size_t k = v.dim();
  const std::size_t rows = m.rows();
  const std::uint64_t total = sparse_generator_count(rows, k, t, p);
  check_budget("inner_dimension", total, cfg);

  DimWitness out;
  out.candidates = total;
  out.exhausted = total;
  if (k == 0 || rows == 0) {
    out.witness = {FieldMatrix(p, rows, k), t};
    out.intersection_or_cover = SubspaceBasis(p, rows);
    return out;
  }

  const auto choices = sparse_row_choices(k, t, p);
  // Scratch layout: rows [0,k) hold V's basis, rows [k,2k) hold Gᵀ.
  auto scan_chunk = [&](std::size_t first) {
    InnerChunk res;
    std::vector<std::size_t> idx(rows, 0);
    idx[0] = first;
    FieldMatrix g(p, rows, k);
    FieldMatrix stacked = v.basis().vstack(FieldMatrix(p, k, rows));
    do {
      load_rows(g, choices, idx);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < rows; ++r) stacked.set(k + c, r, g.at(r, c));
      const std::size_t u_dim = rank(g);
      if (u_dim <= res.best && res.any) continue;
      const std::size_t sum_dim = rank(stacked);
      const std::size_t inter = k + u_dim - sum_dim;
      if (!res.any || inter > res.best) {
        res.best = inter;
        res.arg = g;
        res.any = true;
        if (inter == k) break;  // cannot exceed dim V
      }
    } while (advance(idx, 1, choices.size()));
    return res;
  };

  InnerChunk winner;
  if (cfg.threads <= 1) {
    for (std::size_t c = 0; c < choices.size(); ++c) {
      auto r = scan_chunk(c);
      if (!winner.any || r.best > winner.best) winner = std::move(r);
      if (winner.best == k) break;
    }
  } else {
    auto parts = parallel_map(choices.size(), cfg.threads, scan_chunk);
    for (auto& r : parts)
      if (!winner.any || r.best > winner.best) winner = std::move(r);
  }
  out.value = winner.best;
  out.witness = {winner.arg, t};
  out.intersection_or_cover = SubspaceBasis::column_span(winner.arg).intersection(v);
  return out;
}

// ------------------------------------------------------------------- outer

namespace {

// Depth-first scan of s-column generators, pruning any prefix of rows whose
// system G[0..d]·X = M[0..d] is already inconsistent.
class CoverSearch {
 public:
  CoverSearch(const FieldMatrix& m, std::size_t s, const std::vector<Vec>& choices)
      : m_(m), s_(s), choices_(choices), g_(m.p(), m.rows(), s) {}

  bool run_from(std::size_t first) {
    std::vector<EchelonBasis> levels(m_.rows() + 1, EchelonBasis(m_.p(), s_ + m_.cols()));
    return descend(0, first, levels);
  }
  const FieldMatrix& witness() const { return g_; }

 private:
  bool descend(std::size_t depth, std::size_t only, std::vector<EchelonBasis>& levels) {
    if (depth == m_.rows()) return true;
    const std::size_t lo = depth == 0 ? only : 0;
    const std::size_t hi = depth == 0 ? only + 1 : choices_.size();
    for (std::size_t c = lo; c < hi; ++c) {
      const Vec& choice = choices_[c];
      Vec aug(s_ + m_.cols());
      std::copy(choice.begin(), choice.end(), aug.begin());
      auto mrow = m_.row(depth);
      std::copy(mrow.begin(), mrow.end(), aug.begin() + static_cast<std::ptrdiff_t>(s_));
      levels[depth + 1] = levels[depth];
      Vec probe = aug;
      levels[depth + 1].reduce(probe);
      auto nz = std::find_if(probe.begin(), probe.end(), [](Elem e) { return e != 0; });
      if (nz != probe.end() && static_cast<std::size_t>(nz - probe.begin()) >= s_) continue;
      levels[depth + 1].insert(std::move(aug));
      auto dst = g_.row_mut(depth);
      std::copy(choice.begin(), choice.end(), dst.begin());
      if (descend(depth + 1, only, levels)) return true;
    }
    return false;
  }

  const FieldMatrix& m_;
  std::size_t s_;
  const std::vector<Vec>& choices_;
  FieldMatrix g_;
};

}  // namespace

OuterResult outer_dimension(const FieldMatrix& m, std::size_t t, std::size_t s_max,
                            const SearchConfig& cfg) {
  const unsigned p = m.p();
  const auto v = SubspaceBasis::column_span(m);
  const std::size_t rows = m.rows();
  std::uint64_t exhausted = 0;
  for (std::size_t s = v.dim(); s <= s_max; ++s) {
    const std::uint64_t level = sparse_generator_count(rows, s, t, p);
    check_budget("outer_dimension(s=" + std::to_string(s) + ")", level, cfg);
    exhausted = detail::sat_add(exhausted, level);
    const auto choices = sparse_row_choices(s, t, p);

    std::optional<FieldMatrix> found;
    if (rows == 0) {
      found = FieldMatrix(p, 0, s);
    } else if (cfg.threads <= 1) {
      for (std::size_t c = 0; c < choices.size() && !found; ++c) {
        CoverSearch search(m, s, choices);
        if (search.run_from(c)) found = search.witness();
      }
    } else {
      auto parts = parallel_map(choices.size(), cfg.threads, [&](std::size_t c) {
        CoverSearch search(m, s, choices);
        return search.run_from(c) ? std::optional<FieldMatrix>(search.witness()) : std::nullopt;
      });
      for (auto& r : parts)
        if (r) {
          found = std::move(r);
          break;
        }
    }
    if (found) {
      DimWitness w;
      w.value = s;
      w.witness = {*found, t};
      w.intersection_or_cover = SubspaceBasis::column_span(*found);
      w.candidates = exhausted;
      w.exhausted = exhausted;
      return w;
    }
  }
  return AboveMax{s_max, exhausted};
}

bool verify_inner_witness(const FieldMatrix& m, const DimWitness& w) {
  const auto v = SubspaceBasis::column_span(m);
  const auto& g = w.witness.g;
  if (g.rows() != m.rows() || !w.witness.valid() || g.cols() > v.dim()) return false;
  const auto u = SubspaceBasis::column_span(g);
  const std::size_t inter = v.dim() + u.dim() - rank(v.basis().vstack(u.basis()));
  return inter == w.value && w.intersection_or_cover == u.intersection(v) &&
         w.intersection_or_cover.dim() == w.value;
}

bool verify_outer_witness(const FieldMatrix& m, const DimWitness& w) {
  const auto& g = w.witness.g;
  if (g.rows() != m.rows() || !w.witness.valid() || g.cols() != w.value) return false;
  const auto u = SubspaceBasis::column_span(g);
  return u.contains(SubspaceBasis::column_span(m)) && w.intersection_or_cover == u;
}

}  // namespace rigx
