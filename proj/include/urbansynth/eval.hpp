#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urbansynth/annotations.hpp"

namespace urbansynth {

// K x K pixel counts indexed by (ground truth, prediction). Pixels whose
// ground truth is void (255) are excluded.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(int num_classes)
      : num_classes_(num_classes),
        counts_(static_cast<size_t>(num_classes) * num_classes, 0) {}

  int num_classes() const { return num_classes_; }
  uint64_t& at(int gt, int pred) { return counts_[static_cast<size_t>(gt) * num_classes_ + pred]; }
  uint64_t at(int gt, int pred) const {
    return counts_[static_cast<size_t>(gt) * num_classes_ + pred];
  }
  uint64_t total() const;

  // Matrix addition is the documented reduction for evaluating image sets in
  // parallel.
  ConfusionMatrix& operator+=(const ConfusionMatrix& other);

 private:
  int num_classes_ = 0;
  std::vector<uint64_t> counts_;
};

// Exact counts over a map pair. Throws on dimension mismatch and on any code
// outside [0, num_classes) that is not void; a void prediction on a non-void
// ground-truth pixel is also an error.
ConfusionMatrix confusion(const LabelMap& gt, const LabelMap& pred, int num_classes);

struct IoUReport {
  // nullopt = class absent from both maps (TP + FP + FN == 0).
  std::vector<std::optional<double>> per_class;
  double mean_defined = 0.0;      // absent classes excluded from the mean
  double mean_absent_zero = 0.0;  // absent classes count as zero
};

// Per-class IoU = diag / (row sum + column sum - diag).
IoUReport iou(const ConfusionMatrix& matrix);

// Arithmetic mean over a declared class set with the chosen policy for
// absent (nullopt) classes.
double mean_iou(const std::vector<std::optional<double>>& per_class, bool absent_as_zero);

// Class palette for evaluation: codes must be contiguous 0..K-1.
struct ClassPalette {
  std::vector<std::string> names;  // index = code
  int num_classes() const { return static_cast<int>(names.size()); }
};

// Accepts either the dataset header (dataset.json) or a standalone palette
// file: {"classes": [{"code": 0, "name": "road"}, ...]}.
ClassPalette load_palette_file(const std::string& path);
ClassPalette builtin_palette();

struct DirectoryEvalResult {
  ConfusionMatrix matrix;
  IoUReport report;
  int image_pairs = 0;
  std::vector<std::string> csv_lines;  // "name,iou_or_empty"
};

// Pairs *.png files by identical name in both directories.
DirectoryEvalResult evaluate_directories(const std::string& gt_dir, const std::string& pred_dir,
                                         const ClassPalette& palette);

}  // namespace urbansynth
