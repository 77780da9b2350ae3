#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "irs/ait.hpp"
#include "irs/aitv.hpp"
#include "irs/alias_table.hpp"
#include "irs/awit.hpp"
#include "irs/cumulative_sum.hpp"
#include "irs/error.hpp"
#include "irs/interval_tree.hpp"
#include "irs/rng.hpp"
#include "irs/workload.hpp"

namespace py = pybind11;

namespace {

template <irs::Coordinate Coord>
irs::Dataset<Coord> make_dataset(const std::vector<Coord>& l, const std::vector<Coord>& r,
                                 const std::optional<std::vector<double>>& weights) {
  if (l.size() != r.size() || (weights && weights->size() != l.size())) {
    throw irs::Error(irs::ErrorCode::kInvalidArgument, "l, r and weights must have the same length");
  }
  std::vector<irs::Interval<Coord>> xs(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    xs[i].l = l[i];
    xs[i].r = r[i];
    if (weights) xs[i].weight = (*weights)[i];
  }
  return irs::Dataset<Coord>::from_intervals(std::move(xs), weights.has_value());
}

template <irs::Coordinate Coord>
irs::QueryInterval<Coord> query(Coord l, Coord r) {
  const irs::QueryInterval<Coord> q{l, r};
  irs::validate(q);
  return q;
}

template <typename Xs>
std::vector<irs::IntervalId> ids(const Xs& xs) {
  std::vector<irs::IntervalId> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.id);
  return out;
}

using RecordTuple = std::tuple<int, std::int32_t, std::uint32_t, std::uint32_t>;

template <irs::Coordinate Coord>
void bind_indexes(py::module_& m, const std::string& suffix) {
  using Ait = irs::AugmentedIntervalTree<Coord>;
  using Tree = irs::IntervalTree<Coord>;
  using V = irs::AitV<Coord>;
  using W = irs::AugmentedWeightedIntervalTree<Coord>;
  using X = irs::Interval<Coord>;

  py::class_<Tree>(m, ("IntervalTree" + suffix).c_str())
      .def(py::init([](const std::vector<Coord>& l, const std::vector<Coord>& r) {
             return Tree(make_dataset<Coord>(l, r, std::nullopt));
           }),
           py::arg("l"), py::arg("r"))
      .def("__len__", &Tree::size)
      .def_property_readonly("height", &Tree::height)
      .def("range_count", [](const Tree& t, Coord l, Coord r) { return t.range_count(query(l, r)); })
      .def("range_search", [](const Tree& t, Coord l, Coord r) { return ids(t.range_search(query(l, r))); })
      .def("stabbing_query", [](const Tree& t, Coord p) { return ids(t.stabbing_query(p)); })
      .def("sample", [](const Tree& t, Coord l, Coord r, std::int64_t s, irs::Rng& rng) {
        return ids(t.search_then_sample(query(l, r), s, rng));
      });

  py::class_<Ait>(m, ("AIT" + suffix).c_str())
      .def(py::init([](const std::vector<Coord>& l, const std::vector<Coord>& r) {
             return Ait(make_dataset<Coord>(l, r, std::nullopt));
           }),
           py::arg("l"), py::arg("r"))
      .def(py::init<>())
      .def("__len__", [](const Ait& t) { return t.size() + t.pool_size(); })
      .def_property_readonly("height", &Ait::height)
      .def_property_readonly("pool_size", &Ait::pool_size)
      .def_property_readonly("pool_capacity", &Ait::pool_capacity)
      .def_property_readonly("rebuild_count", &Ait::rebuild_count)
      .def("entry_count", &Ait::entry_count)
      .def("range_count", [](const Ait& t, Coord l, Coord r) { return t.range_count(query(l, r)); })
      .def("query_records",
           [](const Ait& t, Coord l, Coord r) {
             std::vector<RecordTuple> out;
             for (const auto& rec : t.query_records(query(l, r)).records) {
               out.emplace_back(static_cast<int>(rec.tag), rec.node, rec.idx_l, rec.idx_r);
             }
             return out;
           },
           "(tag, node, first, last) runs; tags 0=Ll, 1=Lr, 2=ALr, 3=ALl, indices 1-based")
      .def("covered_ids", [](const Ait& t, Coord l, Coord r) { return t.expand(t.query_records(query(l, r))); })
      .def("sample", [](const Ait& t, Coord l, Coord r, std::int64_t s,
                        irs::Rng& rng) { return ids(t.irs_sample(query(l, r), s, rng)); })
      .def("insert", [](Ait& t, Coord l, Coord r, irs::IntervalId id) { t.insert(X{l, r, id}); })
      .def("enqueue", [](Ait& t, Coord l, Coord r, irs::IntervalId id) { t.enqueue(X{l, r, id}); })
      .def("flush", &Ait::flush)
      .def("erase", &Ait::erase)
      .def("__contains__", &Ait::contains);

  py::class_<V>(m, ("AITV" + suffix).c_str())
      .def(py::init([](const std::vector<Coord>& l, const std::vector<Coord>& r) {
             return V(make_dataset<Coord>(l, r, std::nullopt));
           }),
           py::arg("l"), py::arg("r"))
      .def("__len__", &V::size)
      .def_property_readonly("bucket_size", &V::bucket_size)
      .def_property_readonly("bucket_count", &V::bucket_count)
      .def("entry_count", &V::entry_count)
      .def(
          "sample",
          [](const V& v, Coord l, Coord r, std::int64_t s, irs::Rng& rng) {
            typename V::SampleStats stats;
            auto xs = v.sample(query(l, r), s, rng, &stats);
            return std::make_pair(ids(xs), stats.attempts);
          },
          "Returns (ids, attempts)");

  py::class_<W>(m, ("AWIT" + suffix).c_str())
      .def(py::init([](const std::vector<Coord>& l, const std::vector<Coord>& r, const std::vector<double>& w) {
             return W(make_dataset<Coord>(l, r, w));
           }),
           py::arg("l"), py::arg("r"), py::arg("weights"))
      .def("__len__", &W::size)
      .def("range_count", [](const W& t, Coord l, Coord r) { return t.tree().range_count(query(l, r)); })
      .def("sample", [](const W& t, Coord l, Coord r, std::int64_t s, irs::Rng& rng) {
        return ids(t.weighted_irs_sample(query(l, r), s, rng));
      });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Independent range sampling over intervals";

  static py::exception<irs::Error> error(m, "IrsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const irs::Error& e) {
      py::set_error(error, (std::string(irs::to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<irs::Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
      .def_property_readonly("seed", &irs::Rng::seed)
      .def("below", &irs::Rng::below)
      .def("unit", &irs::Rng::unit);
  m.attr("RNG_ALGORITHM") = std::string(irs::Rng::kAlgorithm);

  py::class_<irs::AliasTable>(m, "AliasTable")
      .def(py::init([](const std::vector<double>& w) { return irs::AliasTable(w); }))
      .def("__len__", &irs::AliasTable::size)
      .def_property_readonly("tau", &irs::AliasTable::tau)
      .def("sample", &irs::AliasTable::sample);

  py::class_<irs::CumulativeSumArray>(m, "CumulativeSum")
      .def(py::init([](const std::vector<double>& w) { return irs::CumulativeSumArray(w); }))
      .def("__len__", &irs::CumulativeSumArray::size)
      .def("__getitem__", &irs::CumulativeSumArray::operator[])
      .def("values", &irs::CumulativeSumArray::values)
      .def("sample_range", &irs::CumulativeSumArray::sample_range);

  bind_indexes<std::int64_t>(m, "");
  bind_indexes<double>(m, "Float");

  m.def(
      "generate_dataset",
      [](std::size_t n, const std::string& distribution, std::int64_t domain_min, std::int64_t domain_max,
         double mean_length, bool weighted, std::uint64_t seed) {
        irs::DatasetSpec<std::int64_t> spec;
        spec.n = n;
        spec.distribution = irs::parse_length_distribution(distribution);
        spec.domain_min = domain_min;
        spec.domain_max = domain_max;
        spec.mean_length = mean_length;
        spec.weighted = weighted;
        spec.seed = seed;
        const auto d = irs::generate_dataset(spec);
        std::vector<std::int64_t> l, r;
        std::vector<double> w;
        for (const auto& x : d.intervals) {
          l.push_back(x.l);
          r.push_back(x.r);
          w.push_back(x.weight);
        }
        return std::make_tuple(l, r, w);
      },
      py::arg("n"), py::arg("distribution") = "uniform-length", py::arg("domain_min") = 0,
      py::arg("domain_max") = 100'000'000, py::arg("mean_length") = 0.001, py::arg("weighted") = false,
      py::arg("seed") = 0, "Returns (l, r, weights) lists");

  m.def(
      "generate_queries",
      [](std::size_t count, double extent, std::int64_t domain_min, std::int64_t domain_max, std::uint64_t seed) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& q : irs::generate_queries<std::int64_t>(count, extent, domain_min, domain_max, seed)) {
          out.emplace_back(q.l, q.r);
        }
        return out;
      },
      py::arg("count"), py::arg("extent") = 0.08, py::arg("domain_min") = 0, py::arg("domain_max") = 100'000'000,
      py::arg("seed") = 0);
}
