// Python bindings for the pattern generators, re-binning, statistics and
// the file emitters. Samples cross the boundary as plain tuples so the
// module has no third-party runtime dependencies.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kspace/analysis.hpp"
#include "kspace/cava.hpp"
#include "kspace/gro.hpp"
#include "kspace/io.hpp"
#include "kspace/opra.hpp"
#include "kspace/pr4d.hpp"
#include "kspace/vista.hpp"

namespace py = pybind11;
using namespace kspace;

namespace {

py::list samples_list(const SamplingPattern& pattern) {
  py::list out;
  for (const Sample& s : pattern.samples)
    out.append(py::make_tuple(s.encoding, s.order, s.frame, s.ky, s.kz));
  return out;
}

py::dict mask_dict(const Mask& mask) {
  py::dict out;
  out["rows"] = mask.rows;
  out["cols"] = mask.cols;
  out["counts"] = mask.counts;
  return out;
}

py::dict stats_dict(const StatsReport& report) {
  py::dict out;
  out["frames"] = report.frames;
  out["encodings"] = report.encodings;
  out["per_frame_counts"] = report.per_frame_counts;
  out["density_histogram"] = report.density_histogram;
  out["ring_cells"] = report.ring_cells;
  out["coverage_fraction"] = report.coverage_fraction;
  out["collision_count"] = report.collision_count;
  py::list jumps;
  for (const JumpStats& js : report.jump_stats) {
    py::dict j;
    j["max"] = js.max;
    j["mean"] = js.mean;
    j["stddev"] = js.stddev;
    jumps.append(j);
  }
  out["jump_stats"] = jumps;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "pseudo-random Cartesian k-space sampling patterns for dynamic MRI";

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("ny", &GridSpec::ny)
      .def_readwrite("nz", &GridSpec::nz)
      .def_readwrite("frames", &GridSpec::frames)
      .def_readwrite("encodings", &GridSpec::encodings)
      .def("__repr__", [](const GridSpec& g) {
        return "GridSpec(ny=" + std::to_string(g.ny) + ", nz=" + std::to_string(g.nz) +
               ", frames=" + std::to_string(g.frames) +
               ", encodings=" + std::to_string(g.encodings) + ")";
      });

  py::class_<SamplingPattern>(m, "SamplingPattern")
      .def_readonly("grid", &SamplingPattern::grid)
      .def_property_readonly(
          "method", [](const SamplingPattern& p) { return method_name(p.method); })
      .def("samples", &samples_list,
           "all samples as (encoding, order, frame, ky, kz) tuples")
      .def("samples_per_encoding", &SamplingPattern::samples_per_encoding)
      .def("__len__", [](const SamplingPattern& p) { return p.samples.size(); })
      .def("__repr__", [](const SamplingPattern& p) {
        return std::string("SamplingPattern(") + method_name(p.method) + ", " +
               std::to_string(p.samples.size()) + " samples)";
      });

  py::class_<VistaParams>(m, "VistaParams")
      .def(py::init<>())
      .def_readwrite("pe", &VistaParams::pe)
      .def_readwrite("frames", &VistaParams::frames)
      .def_readwrite("n", &VistaParams::n)
      .def_readwrite("s", &VistaParams::s)
      .def_readwrite("sigma", &VistaParams::sigma)
      .def_readwrite("w", &VistaParams::w)
      .def_readwrite("beta", &VistaParams::beta)
      .def_readwrite("max_iters", &VistaParams::max_iters)
      .def_readwrite("seed", &VistaParams::seed);

  py::class_<GroParams>(m, "GroParams")
      .def(py::init<>())
      .def_readwrite("pe", &GroParams::pe)
      .def_readwrite("frames", &GroParams::frames)
      .def_readwrite("n", &GroParams::n)
      .def_readwrite("encodings", &GroParams::encodings)
      .def_readwrite("s", &GroParams::s)
      .def_readwrite("alpha", &GroParams::alpha)
      .def_readwrite("tau", &GroParams::tau);

  py::class_<CavaParams>(m, "CavaParams")
      .def(py::init<>())
      .def_readwrite("pe", &CavaParams::pe)
      .def_readwrite("frames", &CavaParams::frames)
      .def_readwrite("n", &CavaParams::n)
      .def_readwrite("encodings", &CavaParams::encodings)
      .def_readwrite("s", &CavaParams::s)
      .def_readwrite("alpha", &CavaParams::alpha)
      .def_readwrite("tau", &CavaParams::tau)
      .def_readwrite("seed", &CavaParams::seed);

  py::class_<OpraParams>(m, "OpraParams")
      .def(py::init<>())
      .def_readwrite("ny", &OpraParams::ny)
      .def_readwrite("nz", &OpraParams::nz)
      .def_readwrite("frames", &OpraParams::frames)
      .def_readwrite("n", &OpraParams::n)
      .def_readwrite("leaflet_len", &OpraParams::leaflet_len)
      .def_readwrite("s", &OpraParams::s)
      .def_readwrite("gamma", &OpraParams::gamma)
      .def_readwrite("g_s", &OpraParams::g_s)
      .def_readwrite("phi", &OpraParams::phi);

  py::class_<Pr4dParams>(m, "Pr4dParams")
      .def(py::init<>())
      .def_readwrite("ny", &Pr4dParams::ny)
      .def_readwrite("nz", &Pr4dParams::nz)
      .def_readwrite("frames", &Pr4dParams::frames)
      .def_readwrite("n", &Pr4dParams::n)
      .def_readwrite("encodings", &Pr4dParams::encodings)
      .def_readwrite("s", &Pr4dParams::s)
      .def_readwrite("gamma", &Pr4dParams::gamma)
      .def_readwrite("g_s", &Pr4dParams::g_s);

  py::class_<StretchMap>(m, "StretchMap")
      .def_readonly("small_n", &StretchMap::small_n)
      .def_readonly("full_n", &StretchMap::full_n)
      .def_readonly("alpha", &StretchMap::alpha)
      .def_readonly("kappa", &StretchMap::kappa)
      .def("apply_real", &StretchMap::apply_real, py::arg("k"))
      .def("apply", &StretchMap::apply, py::arg("k"));

  m.def("golden_ratio", &golden_ratio);
  m.def("golden_fraction", &golden_fraction, py::arg("tau"));
  m.def("make_stretch_map", &make_stretch_map, py::arg("full_n"), py::arg("s"),
        py::arg("alpha"));

  m.def("generate_vista",
        [](const VistaParams& p) { return generate_vista(p); }, py::arg("params"));
  m.def("generate_gro", &generate_gro, py::arg("params"));
  m.def("generate_cava", &generate_cava, py::arg("params"));
  m.def("generate_opra", &generate_opra, py::arg("params"));
  m.def("generate_pr4d", &generate_pr4d, py::arg("params"));

  m.def("rebin_2d", &rebin_2d, py::arg("pattern"), py::arg("n_prime"));
  m.def("rebin_3d", &rebin_3d, py::arg("pattern"), py::arg("n_prime"));

  m.def("pattern_stats",
        [](const SamplingPattern& p) { return stats_dict(pattern_stats(p)); },
        py::arg("pattern"));
  m.def("mask_kyt",
        [](const SamplingPattern& p, int encoding, int lo, int hi) {
          return mask_dict(mask_kyt(p, encoding, lo, hi));
        },
        py::arg("pattern"), py::arg("encoding") = 1, py::arg("order_lo") = 0,
        py::arg("order_hi") = 0);
  m.def("mask_kykz",
        [](const SamplingPattern& p, int encoding, int lo, int hi) {
          return mask_dict(mask_kykz(p, encoding, lo, hi));
        },
        py::arg("pattern"), py::arg("encoding") = 1, py::arg("order_lo") = 0,
        py::arg("order_hi") = 0);

  m.def("write_samples_csv",
        [](const SamplingPattern& p, const std::string& path) {
          write_samples_csv(p, path);
        },
        py::arg("pattern"), py::arg("path"));
  m.def("read_samples_csv",
        [](const std::string& path) {
          std::string method;
          std::vector<Sample> samples = read_samples_csv(path, &method);
          py::list rows;
          for (const Sample& s : samples)
            rows.append(py::make_tuple(s.encoding, s.order, s.frame, s.ky, s.kz));
          return py::make_tuple(method, rows);
        },
        py::arg("path"), "returns (method, rows)");
  m.def("write_mask_pbm",
        [](const SamplingPattern& p, const std::string& path) {
          write_mask_pbm(p, path,
                         p.grid.nz > 1 ? MaskMode::kykz : MaskMode::kyt);
        },
        py::arg("pattern"), py::arg("path"));
  m.def("write_stats",
        [](const SamplingPattern& p, const std::string& path) {
          write_stats(p, path);
        },
        py::arg("pattern"), py::arg("path"));
}
