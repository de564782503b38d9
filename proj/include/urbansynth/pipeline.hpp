#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "urbansynth/camera.hpp"
#include "urbansynth/classes.hpp"

namespace urbansynth {

// Batch generation settings. Loaded from a JSON config file; every field has
// the default shown here (docs/config_format.md).
struct DatasetConfig {
  int image_count = 1;
  int width = 960;
  int height = 540;
  int samples_per_pixel = 256;
  int max_depth = 6;
  int russian_roulette_start_depth = 4;
  float radiance_clamp = 50.0f;  // <= 0 disables
  uint64_t base_seed = 1;
  std::string output_directory = "dataset_out";
  std::string scope_file;       // empty = built-in default scope
  std::string asset_directory;  // empty = built-in prototypes
  int worker_count = 0;         // 0 = hardware concurrency
  bool emit_hdr = false;
  Psf psf = Psf::gaussian(0.6f);

  void validate() const;
  static DatasetConfig from_json_text(const std::string& text);
  static DatasetConfig load_file(const std::string& path);
  std::string to_json_text() const;
};

// Effective worker count: the URBANSYNTH_WORKERS environment variable
// overrides the config value when set.
int effective_worker_count(const DatasetConfig& config);

struct GenerateSummary {
  int generated = 0;
  int skipped = 0;  // already present from a previous run
  int failed = 0;
  std::vector<std::string> errors;

  bool ok() const { return failed == 0; }
};

// Runs the whole per-image pipeline for image i with seed base_seed + i:
// sample -> realize -> render -> PSF -> tonemap -> annotate -> write, and
// appends one manifest record per image. Images already on disk (manifest
// record plus all files present) are skipped, so interrupted runs resume.
// Output bytes are independent of the worker count.
GenerateSummary generate_dataset(const DatasetConfig& config);

// File name helpers (zero-padded index prefix).
std::string image_prefix(int index);

struct ClassHistogram {
  std::array<uint64_t, kClassCount> counts{};
  uint64_t void_pixels = 0;

  uint64_t total() const {
    uint64_t t = void_pixels;
    for (uint64_t c : counts) t += c;
    return t;
  }
};

// Exact per-class pixel counts over label map files.
ClassHistogram compute_stats(const std::vector<std::string>& label_files);
// All *_label.png files under the dataset directory, sorted.
std::vector<std::string> find_label_files(const std::string& dataset_dir);

std::string histogram_csv(const ClassHistogram& hist);
// Textual bar chart summary.
std::string histogram_report(const ClassHistogram& hist);

}  // namespace urbansynth
