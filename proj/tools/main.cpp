// kspace-sampler: generate pseudo-random Cartesian k-space sampling
// patterns (vista / gro / cava / opra / pr4d) and emit them as CSV sample
// lists, netpbm masks/renders, and flat stats files.
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kspace/analysis.hpp"
#include "kspace/cava.hpp"
#include "kspace/gro.hpp"
#include "kspace/io.hpp"
#include "kspace/opra.hpp"
#include "kspace/pr4d.hpp"
#include "kspace/vista.hpp"

namespace fs = std::filesystem;

namespace {

struct OutputOpts {
  std::string out_dir;
  std::string format = "csv,pbm,pgm,stats";
  std::vector<int> window;  // empty or {lo, hi}
};

void add_output_flags(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--out", opts.out_dir, "output directory")->required();
  cmd->add_option("--format", opts.format,
                  "comma list from csv,pbm,pgm,stats (default all)");
  cmd->add_option("--window", opts.window,
                  "acquisition-order window LO HI for the pgm renders")
      ->expected(2);
}

std::set<std::string> parse_formats(const std::string& spec) {
  std::set<std::string> formats;
  std::string token;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ',') {
      if (token != "csv" && token != "pbm" && token != "pgm" &&
          token != "stats")
        throw std::invalid_argument("--format: unknown format '" + token + "'");
      formats.insert(token);
      token.clear();
    } else {
      token += spec[i];
    }
  }
  return formats;
}

void emit(const kspace::SamplingPattern& pattern, const OutputOpts& opts) {
  std::set<std::string> formats = parse_formats(opts.format);
  int lo = 0, hi = 0;
  if (!opts.window.empty()) {
    lo = opts.window[0];
    hi = opts.window[1];
  }
  fs::path dir = opts.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw kspace::IoError("cannot create output directory " + dir.string());
  if (formats.count("csv")) kspace::write_samples_csv(pattern, dir / "samples.csv");
  if (formats.count("pbm"))
    kspace::write_mask_pbm(pattern, dir / "mask.pbm",
                           pattern.grid.nz > 1 ? kspace::MaskMode::kykz
                                               : kspace::MaskMode::kyt);
  if (formats.count("pgm")) {
    kspace::render_pgm(pattern, dir / "render.pgm", lo, hi);
    if (pattern.grid.nz == 1)
      kspace::render_trace_pgm(pattern, dir / "trace.pgm", lo, hi);
  }
  if (formats.count("stats")) kspace::write_stats(pattern, dir / "stats.txt");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-random Cartesian k-space sampling patterns for dynamic MRI"};
  app.require_subcommand(1);

  kspace::VistaParams vista_params;
  kspace::GroParams gro_params;
  kspace::CavaParams cava_params;
  kspace::OpraParams opra_params;
  kspace::Pr4dParams pr4d_params;
  std::vector<int> opra_pe = {opra_params.ny, opra_params.nz};
  std::vector<int> pr4d_pe = {pr4d_params.ny, pr4d_params.nz};
  OutputOpts vista_out, gro_out, cava_out, opra_out, pr4d_out;
  int cava_rebin = 0, opra_rebin = 0, pr4d_rebin = 0;
  CLI::Option* cava_rebin_opt = nullptr;
  CLI::Option* opra_rebin_opt = nullptr;
  CLI::Option* pr4d_rebin_opt = nullptr;

  CLI::App* vista_cmd =
      app.add_subcommand("vista", "energy-minimized variable-density ky-t pattern");
  vista_cmd->add_option("--pe", vista_params.pe, "phase-encode grid size");
  vista_cmd->add_option("--fr", vista_params.frames, "number of frames");
  vista_cmd->add_option("--n", vista_params.n, "samples per frame");
  vista_cmd->add_option("--s", vista_params.s, "variable-density extent (1..10)");
  vista_cmd->add_option("--sig", vista_params.sigma,
                        "density Gaussian width (default pe/6)");
  vista_cmd->add_option("--w", vista_params.w,
                        "time-axis scaling (default max(pe/(10n)+0.25, 1))");
  vista_cmd->add_option("--beta", vista_params.beta, "norm exponent");
  vista_cmd->add_option("--max-iters", vista_params.max_iters,
                        "descent iteration cap");
  vista_cmd->add_option("--seed", vista_params.seed, "random seed");
  add_output_flags(vista_cmd, vista_out);

  CLI::App* gro_cmd =
      app.add_subcommand("gro", "golden-ratio offset ky-t pattern");
  gro_cmd->add_option("--pe", gro_params.pe, "phase-encode grid size");
  gro_cmd->add_option("--fr", gro_params.frames, "number of frames");
  gro_cmd->add_option("--n", gro_params.n, "samples per frame");
  gro_cmd->add_option("--e", gro_params.encodings, "number of encodings");
  gro_cmd->add_option("--s", gro_params.s, "variable-density extent (>= 1)");
  gro_cmd->add_option("--alph", gro_params.alpha, "density-transition control");
  gro_cmd->add_option("--tau", gro_params.tau, "golden-fraction index (>= 1)");
  add_output_flags(gro_cmd, gro_out);

  CLI::App* cava_cmd = app.add_subcommand(
      "cava", "golden-sequence ky pattern with retrospective binning");
  cava_cmd->add_option("--pe", cava_params.pe, "phase-encode grid size");
  cava_cmd->add_option("--fr", cava_params.frames, "nominal number of frames");
  cava_cmd->add_option("--n", cava_params.n, "nominal samples per frame");
  cava_cmd->add_option("--e", cava_params.encodings, "number of encodings");
  cava_cmd->add_option("--s", cava_params.s, "variable-density extent (>= 1)");
  cava_cmd->add_option("--alph", cava_params.alpha, "density-transition control");
  cava_cmd->add_option("--tau", cava_params.tau, "golden-fraction index (>= 1)");
  cava_cmd->add_option("--seed", cava_params.seed, "random seed");
  cava_rebin_opt =
      cava_cmd->add_option("--rebin-n", cava_rebin, "re-bin into frames of this size");
  add_output_flags(cava_cmd, cava_out);

  CLI::App* opra_cmd =
      app.add_subcommand("opra", "golden-angle leaflet ky-kz pattern");
  opra_cmd->add_option("--pe", opra_pe, "phase-encode matrix NY NZ")->expected(2);
  opra_cmd->add_option("--fr", opra_params.frames, "nominal number of frames");
  opra_cmd->add_option("--n", opra_params.n, "nominal samples per frame");
  opra_cmd->add_option("--l", opra_params.leaflet_len, "samples per leaflet (even)");
  opra_cmd->add_option("--s", opra_params.s, "variable-density extent (>= 1)");
  opra_cmd->add_option("--ar", opra_params.gamma, "aspect-ratio exponent");
  opra_cmd->add_option("--gs", opra_params.g_s, "leaflet shift irrational");
  opra_cmd->add_option("--phi", opra_params.phi, "second-arm angular offset");
  opra_rebin_opt =
      opra_cmd->add_option("--rebin-n", opra_rebin, "re-bin into frames of this size");
  add_output_flags(opra_cmd, opra_out);

  CLI::App* pr4d_cmd =
      app.add_subcommand("pr4d", "pseudo-radial multi-encoding ky-kz pattern");
  pr4d_cmd->add_option("--pe", pr4d_pe, "phase-encode matrix NY NZ")->expected(2);
  pr4d_cmd->add_option("--fr", pr4d_params.frames, "nominal number of frames");
  pr4d_cmd->add_option("--n", pr4d_params.n, "nominal samples per frame");
  pr4d_cmd->add_option("--e", pr4d_params.encodings, "number of encodings");
  pr4d_cmd->add_option("--s", pr4d_params.s, "variable-density extent (>= 1)");
  pr4d_cmd->add_option("--ar", pr4d_params.gamma, "aspect-ratio exponent");
  pr4d_cmd->add_option("--gs", pr4d_params.g_s, "angle increment irrational");
  pr4d_rebin_opt =
      pr4d_cmd->add_option("--rebin-n", pr4d_rebin, "re-bin into frames of this size");
  add_output_flags(pr4d_cmd, pr4d_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*vista_cmd) {
      emit(kspace::generate_vista(vista_params), vista_out);
    } else if (*gro_cmd) {
      emit(kspace::generate_gro(gro_params), gro_out);
    } else if (*cava_cmd) {
      kspace::SamplingPattern pattern = kspace::generate_cava(cava_params);
      if (cava_rebin_opt->count()) pattern = kspace::rebin_2d(pattern, cava_rebin);
      emit(pattern, cava_out);
    } else if (*opra_cmd) {
      opra_params.ny = opra_pe[0];
      opra_params.nz = opra_pe[1];
      kspace::SamplingPattern pattern = kspace::generate_opra(opra_params);
      if (opra_rebin_opt->count()) pattern = kspace::rebin_3d(pattern, opra_rebin);
      emit(pattern, opra_out);
    } else if (*pr4d_cmd) {
      pr4d_params.ny = pr4d_pe[0];
      pr4d_params.nz = pr4d_pe[1];
      kspace::SamplingPattern pattern = kspace::generate_pr4d(pr4d_params);
      if (pr4d_rebin_opt->count()) pattern = kspace::rebin_3d(pattern, pr4d_rebin);
      emit(pattern, pr4d_out);
    }
  } catch (const kspace::IoError& e) {
    std::fprintf(stderr, "kspace-sampler: io error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "kspace-sampler: error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "kspace-sampler: error: %s\n", e.what());
    return 2;
  }
  return 0;
}
