#include "kspace/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <utility>

#include "kspace/analysis.hpp"

namespace kspace {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt_key(const char* stem, int index, int width) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s%0*d", stem, width, index);
  return buf;
}

void check_window(const SamplingPattern& pattern, int lo, int hi) {
  if (lo == 0 && hi == 0) return;
  int per_enc = pattern.samples_per_encoding();
  if (lo < 1 || hi < lo || hi > per_enc)
    throw std::domain_error("render window out of range 1.." +
                            std::to_string(per_enc));
}

std::string pgm_from_counts(const std::vector<int>& counts, int rows, int cols) {
  int maxval = 1;
  for (int c : counts) maxval = std::max(maxval, c);
  std::string out = "P2\n" + std::to_string(cols) + " " + std::to_string(rows) +
                    "\n" + std::to_string(maxval) + "\n";
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c) out += ' ';
      out += std::to_string(counts[static_cast<std::size_t>(r) * cols + c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

namespace detail {

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into place: " + path.string());
  }
}

}  // namespace detail

void write_samples_csv(const SamplingPattern& pattern,
                       const std::filesystem::path& path) {
  std::vector<Sample> rows = pattern.samples;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Sample& a, const Sample& b) {
                     if (a.encoding != b.encoding) return a.encoding < b.encoding;
                     return a.order < b.order;
                   });
  std::string name = method_name(pattern.method);
  std::string out = "# kspace-sampler v1\nmethod,encoding,order,frame,ky,kz\n";
  for (const Sample& smp : rows) {
    out += name;
    out += ',';
    out += std::to_string(smp.encoding);
    out += ',';
    out += std::to_string(smp.order);
    out += ',';
    out += std::to_string(smp.frame);
    out += ',';
    out += std::to_string(smp.ky);
    out += ',';
    out += std::to_string(smp.kz);
    out += '\n';
  }
  detail::atomic_write(path, out);
}

std::vector<Sample> read_samples_csv(const std::filesystem::path& path,
                                     std::string* method_name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "# kspace-sampler v1")
    throw IoError(path.string() + ": missing version line");
  if (!std::getline(in, line) || line != "method,encoding,order,frame,ky,kz")
    throw IoError(path.string() + ": missing header line");

  std::vector<Sample> samples;
  int line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string fields[6];
    int field = 0;
    for (char ch : line) {
      if (ch == ',') {
        if (++field >= 6)
          throw IoError(path.string() + ":" + std::to_string(line_no) +
                        ": too many columns");
      } else {
        fields[field] += ch;
      }
    }
    if (field != 5)
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": expected 6 columns");
    if (method_name && samples.empty()) *method_name = fields[0];
    Sample smp;
    try {
      smp.encoding = std::stoi(fields[1]);
      smp.order = std::stoi(fields[2]);
      smp.frame = std::stoi(fields[3]);
      smp.ky = std::stoi(fields[4]);
      smp.kz = std::stoi(fields[5]);
    } catch (const std::exception&) {
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": bad integer field");
    }
    samples.push_back(smp);
  }
  return samples;
}

void write_mask_pbm(const SamplingPattern& pattern,
                    const std::filesystem::path& path, MaskMode mode) {
  Mask mask = mode == MaskMode::kyt ? mask_kyt(pattern, 1)
                                    : mask_kykz(pattern, 1);
  std::string out = "P1\n" + std::to_string(mask.cols) + " " +
                    std::to_string(mask.rows) + "\n";
  for (int r = 0; r < mask.rows; ++r) {
    for (int c = 0; c < mask.cols; ++c)
      out += mask.at(r, c) > 0 ? '1' : '0';
    out += '\n';
  }
  detail::atomic_write(path, out);
}

void render_pgm(const SamplingPattern& pattern,
                const std::filesystem::path& path, int order_lo, int order_hi) {
  check_window(pattern, order_lo, order_hi);
  Mask mask = pattern.grid.nz > 1
                  ? mask_kykz(pattern, 1, order_lo, order_hi)
                  : mask_kyt(pattern, 1, order_lo, order_hi);
  detail::atomic_write(path, pgm_from_counts(mask.counts, mask.rows, mask.cols));
}

void render_trace_pgm(const SamplingPattern& pattern,
                      const std::filesystem::path& path, int order_lo,
                      int order_hi) {
  if (pattern.grid.nz > 1)
    throw std::domain_error("order trace is only defined for 2D methods");
  check_window(pattern, order_lo, order_hi);
  if (order_lo == 0 && order_hi == 0) {
    order_lo = 1;
    order_hi = pattern.samples_per_encoding();
  }
  int cols = order_hi - order_lo + 1;
  int rows = pattern.grid.ny;
  std::vector<int> counts(static_cast<std::size_t>(rows) * cols, 0);
  for (const Sample& smp : pattern.samples) {
    if (smp.encoding != 1) continue;
    if (smp.order < order_lo || smp.order > order_hi) continue;
    ++counts[static_cast<std::size_t>(smp.ky - 1) * cols + (smp.order - order_lo)];
  }
  detail::atomic_write(path, pgm_from_counts(counts, rows, cols));
}

void write_stats(const SamplingPattern& pattern,
                 const std::filesystem::path& path) {
  StatsReport report = pattern_stats(pattern);
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("method", method_name(pattern.method));
  kv.emplace_back("grid.ny", std::to_string(pattern.grid.ny));
  kv.emplace_back("grid.nz", std::to_string(pattern.grid.nz));
  kv.emplace_back("grid.frames", std::to_string(pattern.grid.frames));
  kv.emplace_back("grid.encodings", std::to_string(pattern.grid.encodings));
  kv.emplace_back("samples", std::to_string(pattern.samples.size()));
  kv.emplace_back("collision_count", std::to_string(report.collision_count));
  kv.emplace_back("coverage_fraction", fmt_double(report.coverage_fraction));
  for (int e = 1; e <= report.encodings; ++e) {
    std::string stem = fmt_key("jump.e", e, 2);
    const JumpStats& js = report.jump_stats[e - 1];
    kv.emplace_back(stem + ".max", fmt_double(js.max));
    kv.emplace_back(stem + ".mean", fmt_double(js.mean));
    kv.emplace_back(stem + ".stddev", fmt_double(js.stddev));
    for (int f = 1; f <= report.frames; ++f)
      kv.emplace_back(fmt_key("pfc.e", e, 2) + "." + fmt_key("f", f, 4),
                      std::to_string(
                          report.per_frame_counts[(e - 1) * report.frames +
                                                  (f - 1)]));
  }
  for (std::size_t b = 0; b < report.density_histogram.size(); ++b)
    kv.emplace_back(fmt_key("hist.b", static_cast<int>(b) + 1, 4),
                    std::to_string(report.density_histogram[b]));
  for (std::size_t b = 0; b < report.ring_cells.size(); ++b)
    kv.emplace_back(fmt_key("ring.b", static_cast<int>(b) + 1, 4),
                    std::to_string(report.ring_cells[b]));
  for (const auto& [key, value] : pattern.params_echo)
    kv.emplace_back("param." + key, value);
  std::sort(kv.begin(), kv.end());
  std::string out;
  for (const auto& [key, value] : kv) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  detail::atomic_write(path, out);
}

}  // namespace kspace
