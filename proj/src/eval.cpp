#include "urbansynth/eval.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "urbansynth/image_io.hpp"

namespace urbansynth {

uint64_t ConfusionMatrix::total() const {
  uint64_t t = 0;
  for (uint64_t c : counts_) t += c;
  return t;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  if (other.num_classes_ != num_classes_)
    throw std::invalid_argument("confusion matrix size mismatch");
  for (size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

ConfusionMatrix confusion(const LabelMap& gt, const LabelMap& pred, int num_classes) {
  if (gt.width != pred.width || gt.height != pred.height)
    throw std::invalid_argument("confusion: map dimensions differ (" + std::to_string(gt.width) +
                                "x" + std::to_string(gt.height) + " vs " +
                                std::to_string(pred.width) + "x" + std::to_string(pred.height) +
                                ")");
  ConfusionMatrix m(num_classes);
  const size_t n = gt.codes.size();
  for (size_t i = 0; i < n; ++i) {
    const uint8_t g = gt.codes[i];
    if (g == kVoidCode) continue;
    const uint8_t p = pred.codes[i];
    if (g >= num_classes)
      throw std::invalid_argument("confusion: ground-truth code " + std::to_string(g) +
                                  " outside the declared class set");
    if (p >= num_classes)
      throw std::invalid_argument("confusion: prediction code " + std::to_string(p) +
                                  " outside the declared class set");
    m.at(g, p)++;
  }
  return m;
}

IoUReport iou(const ConfusionMatrix& matrix) {
  const int k = matrix.num_classes();
  IoUReport report;
  report.per_class.resize(k);
  for (int c = 0; c < k; ++c) {
    uint64_t row = 0, col = 0;
    for (int j = 0; j < k; ++j) {
      row += matrix.at(c, j);
      col += matrix.at(j, c);
    }
    const uint64_t tp = matrix.at(c, c);
    const uint64_t denom = row + col - tp;  // TP + FP + FN
    if (denom == 0) continue;
    report.per_class[c] = static_cast<double>(tp) / static_cast<double>(denom);
  }
  report.mean_defined = mean_iou(report.per_class, false);
  report.mean_absent_zero = mean_iou(report.per_class, true);
  return report;
}

double mean_iou(const std::vector<std::optional<double>>& per_class, bool absent_as_zero) {
  double sum = 0.0;
  int counted = 0;
  for (const auto& v : per_class) {
    if (v) {
      sum += *v;
      counted++;
    } else if (absent_as_zero) {
      counted++;
    }
  }
  return counted == 0 ? 0.0 : sum / counted;
}

ClassPalette builtin_palette() {
  ClassPalette p;
  for (const auto& name : class_names()) p.names.push_back(name);
  return p;
}

ClassPalette load_palette_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open palette file: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.contains("classes"))
    throw std::runtime_error(path + ": missing 'classes' array");
  std::vector<std::pair<int, std::string>> entries;
  for (const auto& e : j.at("classes")) {
    const int code = e.at("code").get<int>();
    if (code == kVoidCode) continue;  // void is implicit
    entries.emplace_back(code, e.at("name").get<std::string>());
  }
  std::sort(entries.begin(), entries.end());
  ClassPalette p;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != static_cast<int>(i))
      throw std::runtime_error(path + ": class codes must be contiguous from 0");
    p.names.push_back(entries[i].second);
  }
  return p;
}

DirectoryEvalResult evaluate_directories(const std::string& gt_dir, const std::string& pred_dir,
                                         const ClassPalette& palette) {
  namespace fs = std::filesystem;
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(gt_dir)) {
    if (entry.path().extension() == ".png") names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  if (names.empty()) throw std::runtime_error("no .png label maps in " + gt_dir);

  DirectoryEvalResult result;
  result.matrix = ConfusionMatrix(palette.num_classes());
  for (const std::string& name : names) {
    const fs::path pred_path = fs::path(pred_dir) / name;
    if (!fs::exists(pred_path))
      throw std::runtime_error("prediction missing for " + name + " in " + pred_dir);
    const GrayImage8 g = read_png_gray8((fs::path(gt_dir) / name).string());
    const GrayImage8 p = read_png_gray8(pred_path.string());
    const LabelMap gt{g.width, g.height, g.data};
    const LabelMap pred{p.width, p.height, p.data};
    result.matrix += confusion(gt, pred, palette.num_classes());
    result.image_pairs++;
  }
  result.report = iou(result.matrix);
  for (int c = 0; c < palette.num_classes(); ++c) {
    std::ostringstream line;
    line << palette.names[c] << ",";
    if (result.report.per_class[c]) line << *result.report.per_class[c];
    result.csv_lines.push_back(line.str());
  }
  return result;
}

}  // namespace urbansynth
