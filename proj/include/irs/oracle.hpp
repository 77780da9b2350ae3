#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "irs/ait.hpp"
#include "irs/aitv.hpp"
#include "irs/alias_table.hpp"
#include "irs/awit.hpp"
#include "irs/error.hpp"
#include "irs/interval.hpp"

/// Reference implementations for verification. Range answers come from a
/// linear scan over `overlaps` only; nothing here consults an index to
/// decide membership.
namespace irs::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double.
Rational to_rational(double v);

template <Coordinate Coord>
std::vector<Interval<Coord>> range(std::span<const Interval<Coord>> data, const QueryInterval<Coord>& q) {
  std::vector<Interval<Coord>> out;
  for (const auto& x : data) {
    if (!x.pseudo && overlaps(q, x)) out.push_back(x);
  }
  return out;
}

template <Coordinate Coord>
std::uint64_t count(std::span<const Interval<Coord>> data, const QueryInterval<Coord>& q) {
  std::uint64_t n = 0;
  for (const auto& x : data) n += (!x.pseudo && overlaps(q, x)) ? 1 : 0;
  return n;
}

/// w(x) / w(q ∩ X) over the scanned range. Throws kInvalidArgument when
/// nothing overlaps q.
template <Coordinate Coord>
std::map<IntervalId, double> weighted_pmf(std::span<const Interval<Coord>> data, const QueryInterval<Coord>& q) {
  const auto hits = range(data, q);
  if (hits.empty()) throw Error(ErrorCode::kInvalidArgument, "query overlaps no interval");
  double total = 0.0;
  for (const auto& x : hits) total += x.weight;
  std::map<IntervalId, double> pmf;
  for (const auto& x : hits) pmf[x.id] = x.weight / total;
  return pmf;
}

template <Coordinate Coord>
std::map<IntervalId, Rational> weighted_pmf_exact(std::span<const Interval<Coord>> data,
                                                  const QueryInterval<Coord>& q) {
  const auto hits = range(data, q);
  if (hits.empty()) throw Error(ErrorCode::kInvalidArgument, "query overlaps no interval");
  Rational total = 0;
  for (const auto& x : hits) total += to_rational(x.weight);
  std::map<IntervalId, Rational> pmf;
  for (const auto& x : hits) pmf[x.id] = to_rational(x.weight) / total;
  return pmf;
}

// ---- exact enumeration ----------------------------------------------------

/// Exact probability that AliasTable::sample returns each object: the sum of
/// the object's cell entries divided by (cells * capacity).
std::vector<Rational> alias_pmf(const AliasTable& alias);

/// Distribution over ids inside one alias object.
using Atoms = std::vector<std::pair<IntervalId, Rational>>;

/// Composes alias draws with per-object inner distributions.
std::map<IntervalId, Rational> compose(const AliasTable& alias, const std::vector<Atoms>& inner);

/// Exact per-interval probability of one draw of the AIT sampler.
template <Coordinate Coord>
std::map<IntervalId, Rational> exact_uniform_pmf(const AugmentedIntervalTree<Coord>& tree,
                                                 const QueryInterval<Coord>& q) {
  const auto smp = tree.sampler(q);
  if (smp.empty()) return {};
  const auto& rs = smp.records();
  std::vector<Atoms> inner;
  for (const auto& rec : rs.records) {
    Atoms atoms;
    const auto& list = tree.list(rec);
    const Rational p(1, static_cast<long long>(rec.length()));
    for (std::uint32_t idx = rec.idx_l; idx <= rec.idx_r; ++idx) atoms.emplace_back(list[idx - 1], p);
    inner.push_back(std::move(atoms));
  }
  if (!rs.pool_hits.empty()) {
    Atoms atoms;
    const Rational p(1, static_cast<long long>(rs.pool_hits.size()));
    for (IntervalId id : rs.pool_hits) atoms.emplace_back(id, p);
    inner.push_back(std::move(atoms));
  }
  return compose(smp.alias(), inner);
}

/// Exact per-interval probability of one draw of the AWIT sampler: alias
/// mass of the record times the length of the cumulative-sum slot
/// (a[k-1], a[k]] relative to the record's range.
template <Coordinate Coord>
std::map<IntervalId, Rational> exact_weighted_pmf(const AugmentedWeightedIntervalTree<Coord>& awit,
                                                  const QueryInterval<Coord>& q) {
  const auto smp = awit.sampler(q);
  if (smp.empty()) return {};
  std::vector<Atoms> inner;
  for (const auto& rec : smp.records().records) {
    const auto& a = awit.cumulative(rec);
    const auto& list = awit.tree().list(rec);
    const Rational span = to_rational(a[rec.idx_r]) - to_rational(a[rec.idx_l - 1]);
    Atoms atoms;
    for (std::uint32_t k = rec.idx_l; k <= rec.idx_r; ++k) {
      atoms.emplace_back(list[k - 1], (to_rational(a[k]) - to_rational(a[k - 1])) / span);
    }
    inner.push_back(std::move(atoms));
  }
  return compose(smp.alias(), inner);
}

/// Per-attempt probability mass of AIT-V: accepted mass per real interval
/// and the total rejected mass.
struct AcceptanceMass {
  std::map<IntervalId, Rational> accepted;
  Rational rejected = 0;
};

template <Coordinate Coord>
AcceptanceMass exact_aitv_acceptance(const AitV<Coord>& index, const QueryInterval<Coord>& q) {
  AcceptanceMass mass;
  const auto covering = exact_uniform_pmf(index.virtual_tree(), q);
  const Rational slot(1, static_cast<long long>(index.bucket_size()));
  for (const auto& [bucket, p] : covering) {
    for (const auto& x : index.bucket(bucket)) {
      if (!x.pseudo && overlaps(q, x)) {
        mass.accepted[x.id] += p * slot;
      } else {
        mass.rejected += p * slot;
      }
    }
  }
  return mass;
}

// ---- goodness of fit ------------------------------------------------------

struct DistributionReport {
  std::vector<IntervalId> support;
  std::vector<double> expected;       // probability per support member
  std::vector<std::uint64_t> observed;
  std::uint64_t outside = 0;          // draws that fell outside the support
  double chi_square = 0.0;
  std::uint64_t draws = 0;
};

DistributionReport make_report(const std::map<IntervalId, double>& expected, std::span<const IntervalId> draws);

struct ChiSquareResult {
  bool pass = false;
  double p_value = 0.0;
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
};

/// Pearson goodness of fit; passes iff p >= alpha. Requires draws >= 10 x
/// support and every expected count >= 5 (kInvalidArgument otherwise).
ChiSquareResult chi_square_test(const DistributionReport& report, double alpha = 0.001);

}  // namespace irs::oracle
