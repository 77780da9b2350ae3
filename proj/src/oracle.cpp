#include "irs/oracle.hpp"

#include <cmath>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

namespace irs::oracle {

Rational to_rational(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "cannot convert a non-finite value");
  if (v == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(v, &exponent);
  // mantissa * 2^53 is an exact integer for every finite double.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  boost::multiprecision::cpp_int numerator = scaled;
  boost::multiprecision::cpp_int denominator = 1;
  if (exponent >= 0) {
    numerator <<= exponent;
  } else {
    denominator <<= -exponent;
  }
  return Rational(numerator, denominator);
}

std::vector<Rational> alias_pmf(const AliasTable& alias) {
  std::vector<Rational> pmf;
  const Rational denom = to_rational(alias.total()) * static_cast<long long>(alias.size());
  auto credit = [&](const AliasTable::Entry& e) {
    if (e.index >= pmf.size()) pmf.resize(e.index + 1);
    pmf[e.index] += to_rational(e.weight) / denom;
  };
  for (const auto& cell : alias.cells()) {
    if (cell.second) {
      credit(cell.first);
      credit(*cell.second);
    } else {
      // A single-entry cell is returned without consulting its weight.
      credit(AliasTable::Entry{cell.first.index, alias.total()});
    }
  }
  return pmf;
}

std::map<IntervalId, Rational> compose(const AliasTable& alias, const std::vector<Atoms>& inner) {
  const auto outer = alias_pmf(alias);
  std::map<IntervalId, Rational> pmf;
  for (std::size_t k = 0; k < inner.size() && k < outer.size(); ++k) {
    for (const auto& [id, p] : inner[k]) pmf[id] += outer[k] * p;
  }
  return pmf;
}

DistributionReport make_report(const std::map<IntervalId, double>& expected, std::span<const IntervalId> draws) {
  DistributionReport report;
  std::map<IntervalId, std::size_t> slot;
  for (const auto& [id, p] : expected) {
    slot[id] = report.support.size();
    report.support.push_back(id);
    report.expected.push_back(p);
  }
  report.observed.assign(report.support.size(), 0);
  for (IntervalId id : draws) {
    auto it = slot.find(id);
    if (it == slot.end()) {
      ++report.outside;
    } else {
      ++report.observed[it->second];
    }
  }
  report.draws = draws.size();
  const auto n = static_cast<double>(report.draws);
  for (std::size_t i = 0; i < report.support.size(); ++i) {
    const double e = n * report.expected[i];
    const double d = static_cast<double>(report.observed[i]) - e;
    report.chi_square += d * d / e;
  }
  return report;
}

ChiSquareResult chi_square_test(const DistributionReport& report, double alpha) {
  const std::size_t k = report.support.size();
  if (k == 0 || report.draws < 10 * k) {
    throw Error(ErrorCode::kInvalidArgument,
                "chi-square needs at least 10 draws per support member (" + std::to_string(report.draws) +
                    " draws, support " + std::to_string(k) + ")");
  }
  for (double p : report.expected) {
    if (p * static_cast<double>(report.draws) < 5.0) {
      throw Error(ErrorCode::kInvalidArgument, "chi-square needs every expected count >= 5");
    }
  }
  ChiSquareResult result;
  result.statistic = report.chi_square;
  result.degrees_of_freedom = k - 1;
  if (report.outside > 0) {
    result.p_value = 0.0;
  } else if (k == 1) {
    result.p_value = 1.0;
  } else {
    const boost::math::chi_squared dist(static_cast<double>(k - 1));
    result.p_value = boost::math::cdf(boost::math::complement(dist, report.chi_square));
  }
  result.pass = result.p_value >= alpha;
  return result;
}

}  // namespace irs::oracle
