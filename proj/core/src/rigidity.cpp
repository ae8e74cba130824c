#include "rigx/rigidity.hpp"

#include <algorithm>
#include <limits>

namespace rigx {

const char* to_string(RigidityKind kind) noexcept {
  switch (kind) {
    case RigidityKind::Row: return "row";
    case RigidityKind::Global: return "global";
    case RigidityKind::Strong: return "strong";
  }
  return "?";
}

const char* to_string(StrongMethod method) noexcept {
  switch (method) {
    case StrongMethod::InnerDim: return "inner-dim";
    case StrongMethod::GlEnum: return "gl-enum";
    case StrongMethod::SumCover: return "sum-cover";
  }
  return "?";
}

namespace {

constexpr std::size_t kBatch = 4096;

// Row distances to L, aggregated by max (row kind) or sum (global kind).
// Stops early once `cutoff` is reached since the caller only needs values
// below its current best.
std::size_t score(const FieldMatrix& m, const std::vector<Vec>& members, bool sum,
                  std::size_t cutoff) {
  std::size_t acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    std::size_t best = m.cols();
    for (const auto& u : members) {
      best = std::min(best, hamming_distance(row, u));
      if (best == 0) break;
    }
    acc = sum ? acc + best : std::max(acc, best);
    if (acc >= cutoff) return acc;
  }
  return acc;
}

RigidityCertificate threshold(const FieldMatrix& m, std::size_t r, RigidityKind kind,
                              const SearchConfig& cfg) {
  require(r >= 1, ErrorKind::InvalidArgument, "rigidity threshold needs r >= 1");
  const unsigned p = m.p();
  const std::size_t n = m.cols();
  const std::size_t dim = std::min(r - 1, n);
  const std::uint64_t count = gaussian_binomial(n, dim, p);
  check_budget(std::string(to_string(kind)) + "_rigidity_threshold",
               detail::sat_mul(count, detail::sat_pow(p, dim)), cfg);
  const bool sum = kind == RigidityKind::Global;

  RigidityCertificate cert;
  cert.kind = kind;
  cert.r = r;
  cert.threshold = std::numeric_limits<std::size_t>::max();

  std::vector<SubspaceBasis> batch;
  auto flush = [&] {
    const auto cutoff = cert.threshold;
    auto scores = parallel_map(batch.size(), cfg.threads, [&](std::size_t i) {
      return score(m, subspace_members(batch[i], cfg), sum, cutoff);
    });
    for (std::size_t i = 0; i < batch.size(); ++i)
      if (scores[i] < cert.threshold) {
        cert.threshold = scores[i];
        cert.refuting_l = batch[i];
      }
    cert.scanned += batch.size();
    batch.clear();
  };
  enumerate_subspaces(
      n, dim, p,
      [&](const SubspaceBasis& l) {
        batch.push_back(l);
        if (batch.size() == kBatch) flush();
        return cert.threshold > 0 || !batch.empty();
      },
      cfg);
  if (!batch.empty()) flush();
  return cert;
}

}  // namespace

RigidityCertificate row_rigidity_threshold(const FieldMatrix& m, std::size_t r,
                                           const SearchConfig& cfg) {
  return threshold(m, r, RigidityKind::Row, cfg);
}

RigidityCertificate global_rigidity_threshold(const FieldMatrix& m, std::size_t r,
                                              const SearchConfig& cfg) {
  return threshold(m, r, RigidityKind::Global, cfg);
}

FieldMatrix nearest_low_rank(const FieldMatrix& m, const SubspaceBasis& l, const SearchConfig& cfg) {
  require(l.ambient() == m.cols(), ErrorKind::DimensionMismatch, "nearest_low_rank: ambient");
  FieldMatrix b(m.p(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto u = nearest_in_subspace(m.row(i), l, cfg);
    std::copy(u.begin(), u.end(), b.row_mut(i).begin());
  }
  return b;
}

StrongRigidityResult strong_row_rigidity(const FieldMatrix& m, std::size_t r, std::size_t t,
                                         StrongMethod method, const SearchConfig& cfg) {
  require(r >= 1, ErrorKind::InvalidArgument, "strong rigidity needs r >= 1");
  StrongRigidityResult res;
  res.method = method;
  const std::size_t n = m.cols();
  const unsigned p = m.p();

  switch (method) {
    case StrongMethod::InnerDim: {
      const std::size_t rk = rank(m);
      require(rk == n, ErrorKind::RankDeficient,
              "inner-dim method needs full column rank (rank " + std::to_string(rk) + " < " +
                  std::to_string(n) + ")");
      auto w = inner_dimension(m, t, cfg);
      res.rigid = w.value + r <= rk;
      res.scanned = w.exhausted;
      res.inner = std::move(w);
      return res;
    }
    case StrongMethod::GlEnum: {
      const std::uint64_t per_t =
          detail::sat_mul(gaussian_binomial(n, std::min(r - 1, n), p), detail::sat_pow(p, r - 1));
      check_budget("strong_row_rigidity(gl-enum)",
                   detail::sat_mul(general_linear_order(n, p), per_t), cfg);
      res.rigid = true;
      enumerate_invertible(
          n, p,
          [&](const FieldMatrix& tm) {
            ++res.scanned;
            auto cert = row_rigidity_threshold(m * tm, r, cfg);
            if (!cert.rigid_at(t)) {
              res.rigid = false;
              res.breaking_t = tm;
              res.breaking_cert = std::move(cert);
              return false;
            }
            return true;
          },
          cfg);
      return res;
    }
    case StrongMethod::SumCover: {
      const std::size_t rows = m.rows();
      const std::size_t bdim = std::min(r - 1, rows);
      const auto v = SubspaceBasis::column_span(m);
      const std::uint64_t b_count = gaussian_binomial(rows, bdim, p);
      check_budget("strong_row_rigidity(sum-cover)",
                   detail::sat_mul(sparse_generator_count(rows, n, t, p), b_count), cfg);
      std::vector<SubspaceBasis> bs;
      enumerate_subspaces(rows, bdim, p, [&](const SubspaceBasis& b) {
        bs.push_back(b);
        return true;
      }, cfg);
      res.rigid = true;
      enumerate_sparse_generators(
          rows, n, t, p,
          [&](const FieldMatrix& a) {
            const auto as = SubspaceBasis::column_span(a);
            for (const auto& b : bs) {
              ++res.scanned;
              if (as.sum(b).contains(v)) {
                res.rigid = false;
                res.cover_a = a;
                res.cover_b = b;
                return false;
              }
            }
            return true;
          },
          cfg);
      return res;
    }
  }
  return res;
}

bool check_decomposition_bound(const FieldMatrix& m, const FieldMatrix& a, const FieldMatrix& b,
                               std::size_t r, std::size_t t, const SearchConfig& cfg) {
  require(a.rows() == m.rows() && a.cols() == m.cols() && b.rows() == m.rows() &&
              b.cols() == m.cols() && a.p() == m.p() && b.p() == m.p(),
          ErrorKind::PreconditionViolated, "decomposition shapes do not match M");
  require(a + b == m, ErrorKind::PreconditionViolated, "A + B does not reproduce M");
  require(a.row_sparsity() <= t, ErrorKind::PreconditionViolated, "A is not t-row-sparse");
  require(rank(b) <= r, ErrorKind::PreconditionViolated, "rank(B) exceeds r");
  const std::size_t n = m.cols();
  require(rank(m) == n, ErrorKind::PreconditionViolated, "M lacks full column rank");
  const auto d = inner_dimension(m, t, cfg).value;
  return d + 2 * r >= n;
}

}  // namespace rigx
