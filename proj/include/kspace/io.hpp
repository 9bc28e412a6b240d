// File emitters: CSV sample lists, netpbm masks/renders, flat stats.
// Everything here is byte-deterministic for a fixed pattern; writes go
// through a temp file + rename so readers never see partial output.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "kspace/core.hpp"

namespace kspace {

// Raised on any filesystem failure; the CLI maps it to exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// samples.csv, version line + header + one row per sample in
// (encoding, order) order. kz is always present (1 for 2D methods).
void write_samples_csv(const SamplingPattern& pattern,
                       const std::filesystem::path& path);

// Parses a file produced by write_samples_csv. Returns the samples; the
// method name from column 1 is stored in *method_name when non-null.
// Malformed content or unreadable path -> IoError.
std::vector<Sample> read_samples_csv(const std::filesystem::path& path,
                                     std::string* method_name = nullptr);

enum class MaskMode { kyt, kykz };

// Plain P1 bitmap of encoding 1. kyt: width = frames, height = ny, row 1
// is ky = 1 (2D only). kykz: width = nz, height = ny (3D only). Mode
// mismatch -> std::domain_error.
void write_mask_pbm(const SamplingPattern& pattern,
                    const std::filesystem::path& path, MaskMode mode);

// Plain P2 graymap of per-cell sample counts of encoding 1 over the given
// acquisition-order window (order_lo = order_hi = 0 means everything).
// 2D: ky x frame grid; 3D: ky x kz grid. maxval = max(1, max count).
// Window outside 1..samples_per_encoding -> std::domain_error.
void render_pgm(const SamplingPattern& pattern,
                const std::filesystem::path& path, int order_lo = 0,
                int order_hi = 0);

// Order trace for 2D methods: P2 with one column per acquisition order in
// the window and one row per ky; the visited cell is 1. 3D -> domain_error.
void render_trace_pgm(const SamplingPattern& pattern,
                      const std::filesystem::path& path, int order_lo = 0,
                      int order_hi = 0);

// Flat `key=value` dump of pattern_stats plus the parameter echo and grid
// dimensions, one pair per line, sorted by key.
void write_stats(const SamplingPattern& pattern,
                 const std::filesystem::path& path);

namespace detail {
// Writes content to path atomically (temp file in the same directory,
// then rename). Throws IoError on failure.
void atomic_write(const std::filesystem::path& path, const std::string& content);
}  // namespace detail

}  // namespace kspace
