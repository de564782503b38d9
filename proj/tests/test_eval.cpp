#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "urbansynth/eval.hpp"
#include "urbansynth/image_io.hpp"
#include "urbansynth/rng.hpp"

using namespace urbansynth;

namespace {

LabelMap map_1xn(std::vector<uint8_t> codes) {
  LabelMap m;
  m.width = static_cast<int>(codes.size());
  m.height = 1;
  m.codes = std::move(codes);
  return m;
}

LabelMap random_map(RandomStream& rng, int w, int h, int num_classes, bool with_void) {
  LabelMap m;
  m.width = w;
  m.height = h;
  m.codes.resize(static_cast<size_t>(w) * h);
  for (auto& c : m.codes) {
    if (with_void && rng.next_float() < 0.05f) {
      c = kVoidCode;
    } else {
      c = static_cast<uint8_t>(rng.next_int(0, num_classes - 1));
    }
  }
  return m;
}

// Naive triple-loop oracle.
ConfusionMatrix confusion_oracle(const LabelMap& gt, const LabelMap& pred, int k) {
  ConfusionMatrix m(k);
  for (int g = 0; g < k; ++g) {
    for (int p = 0; p < k; ++p) {
      uint64_t count = 0;
      for (size_t i = 0; i < gt.codes.size(); ++i) {
        if (gt.codes[i] == g && pred.codes[i] == p) count++;
      }
      m.at(g, p) = count;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("perfect prediction is a diagonal matrix with IoU 1") {
  RandomStream rng(1, 0);
  const LabelMap gt = random_map(rng, 16, 16, 4, false);
  const ConfusionMatrix m = confusion(gt, gt, 4);
  for (int g = 0; g < 4; ++g)
    for (int p = 0; p < 4; ++p)
      if (g != p) CHECK(m.at(g, p) == 0);
  const IoUReport r = iou(m);
  for (const auto& v : r.per_class)
    if (v) CHECK(*v == doctest::Approx(1.0));
  CHECK(r.mean_defined == doctest::Approx(1.0));
}

TEST_CASE("hand-counted confusion and IoU") {
  const LabelMap gt = map_1xn({0, 0, 1, 1});
  const LabelMap pred = map_1xn({0, 1, 1, 1});
  const ConfusionMatrix m = confusion(gt, pred, 2);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 1) == 2);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.total() == 4);

  const IoUReport r = iou(m);
  REQUIRE(r.per_class[0].has_value());
  CHECK(*r.per_class[0] == doctest::Approx(0.5));
  CHECK(*r.per_class[1] == doctest::Approx(2.0 / 3.0));
  CHECK(r.mean_defined == doctest::Approx(7.0 / 12.0));
}

TEST_CASE("all-void ground truth contributes nothing") {
  const LabelMap gt = map_1xn({kVoidCode, kVoidCode, kVoidCode});
  const LabelMap pred = map_1xn({0, 1, 2});
  const ConfusionMatrix m = confusion(gt, pred, 3);
  CHECK(m.total() == 0);
}

TEST_CASE("errors: dimension mismatch and stray codes") {
  const LabelMap a = map_1xn({0, 1});
  LabelMap b = map_1xn({0, 1, 2});
  CHECK_THROWS_WITH_AS(confusion(a, b, 3), doctest::Contains("dimensions differ"),
                       std::invalid_argument);

  const LabelMap gt = map_1xn({0, 5});
  const LabelMap pred = map_1xn({0, 0});
  CHECK_THROWS_WITH_AS(confusion(gt, pred, 3), doctest::Contains("code 5"),
                       std::invalid_argument);
  // Void predictions on valid ground truth are stray codes too.
  const LabelMap pv = map_1xn({0, kVoidCode});
  CHECK_THROWS_AS(confusion(gt /*gt[1]=5 already throws*/, pv, 3), std::invalid_argument);
  const LabelMap gt_ok = map_1xn({0, 1});
  CHECK_THROWS_WITH_AS(confusion(gt_ok, pv, 3), doctest::Contains("code 255"),
                       std::invalid_argument);
}

TEST_CASE("swapping gt and pred transposes the matrix, per-class IoU unchanged") {
  RandomStream rng(7, 0);
  const LabelMap a = random_map(rng, 16, 16, 5, true);
  LabelMap b = random_map(rng, 16, 16, 5, false);
  // Keep void out of b so both orientations are valid inputs.
  LabelMap a_novoid = a;
  for (auto& c : a_novoid.codes)
    if (c == kVoidCode) c = 0;

  const ConfusionMatrix ab = confusion(a_novoid, b, 5);
  const ConfusionMatrix ba = confusion(b, a_novoid, 5);
  for (int g = 0; g < 5; ++g)
    for (int p = 0; p < 5; ++p) CHECK(ab.at(g, p) == ba.at(p, g));

  const IoUReport ra = iou(ab);
  const IoUReport rb = iou(ba);
  for (int c = 0; c < 5; ++c) {
    CHECK(ra.per_class[c].has_value() == rb.per_class[c].has_value());
    if (ra.per_class[c]) CHECK(*ra.per_class[c] == doctest::Approx(*rb.per_class[c]));
  }
}

TEST_CASE("pixel order permutation leaves all metrics unchanged") {
  RandomStream rng(9, 0);
  LabelMap gt = random_map(rng, 16, 16, 6, true);
  LabelMap pred = random_map(rng, 16, 16, 6, false);
  const ConfusionMatrix before = confusion(gt, pred, 6);

  // Deterministic permutation applied to both maps in lockstep.
  std::vector<size_t> perm(gt.codes.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (size_t i = perm.size() - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next_int(0, static_cast<int64_t>(i))]);
  LabelMap gt2 = gt, pred2 = pred;
  for (size_t i = 0; i < perm.size(); ++i) {
    gt2.codes[i] = gt.codes[perm[i]];
    pred2.codes[i] = pred.codes[perm[i]];
  }
  const ConfusionMatrix after = confusion(gt2, pred2, 6);
  for (int g = 0; g < 6; ++g)
    for (int p = 0; p < 6; ++p) CHECK(before.at(g, p) == after.at(g, p));
}

TEST_CASE("matches the naive per-pixel oracle on random maps") {
  RandomStream rng(11, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const LabelMap gt = random_map(rng, 16, 16, kClassCount, true);
    const LabelMap pred = random_map(rng, 16, 16, kClassCount, false);
    const ConfusionMatrix ours = confusion(gt, pred, kClassCount);
    const ConfusionMatrix oracle = confusion_oracle(gt, pred, kClassCount);
    for (int g = 0; g < kClassCount; ++g)
      for (int p = 0; p < kClassCount; ++p) CHECK(ours.at(g, p) == oracle.at(g, p));
  }
}

TEST_CASE("matrix addition is the parallel reduction") {
  RandomStream rng(13, 0);
  const LabelMap gt1 = random_map(rng, 8, 8, 4, false);
  const LabelMap p1 = random_map(rng, 8, 8, 4, false);
  const LabelMap gt2 = random_map(rng, 8, 8, 4, false);
  const LabelMap p2 = random_map(rng, 8, 8, 4, false);

  ConfusionMatrix sum = confusion(gt1, p1, 4);
  sum += confusion(gt2, p2, 4);

  LabelMap gt_cat = map_1xn({});
  gt_cat.codes.insert(gt_cat.codes.end(), gt1.codes.begin(), gt1.codes.end());
  gt_cat.codes.insert(gt_cat.codes.end(), gt2.codes.begin(), gt2.codes.end());
  gt_cat.width = static_cast<int>(gt_cat.codes.size());
  gt_cat.height = 1;
  LabelMap p_cat = gt_cat;
  p_cat.codes.assign(p1.codes.begin(), p1.codes.end());
  p_cat.codes.insert(p_cat.codes.end(), p2.codes.begin(), p2.codes.end());

  const ConfusionMatrix direct = confusion(gt_cat, p_cat, 4);
  for (int g = 0; g < 4; ++g)
    for (int p = 0; p < 4; ++p) CHECK(sum.at(g, p) == direct.at(g, p));
}

TEST_CASE("published 16-class mean reproduces") {
  const std::vector<double> row = {71.33, 34.29, 63.33, 33.33, 23.24, 28.33, 72.58, 5.99,
                                   67.22, 49.67, 26.21, 50.97, 7.10, 5.19, 3.14, 48.89};
  std::vector<std::optional<double>> per_class(row.begin(), row.end());
  CHECK(std::fabs(mean_iou(per_class, false) - 36.93) <= 0.01);
}

TEST_CASE("published 19-class mean with absent classes as zero reproduces") {
  // wall, fence and train are absent; the mean divides by all 19.
  std::vector<std::optional<double>> per_class = {
      85.84, 44.45, 67.05, std::nullopt, std::nullopt, 29.34, 10.50, 24.45, 70.09, 13.51,
      80.10, 50.67, 20.25, 60.51, 5.68, 7.41, std::nullopt, 1.18, 20.91};
  REQUIRE(per_class.size() == 19);
  CHECK(std::fabs(mean_iou(per_class, true) - 31.15) <= 0.01);
  // Excluding the absent classes gives the 16-class mean instead.
  CHECK(mean_iou(per_class, false) == doctest::Approx(591.94 / 16.0).epsilon(1e-3));
}

TEST_CASE("directory evaluation pairs files by name and sums matrices") {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "usyn_eval_dirs";
  fs::remove_all(root);
  fs::create_directories(root / "gt");
  fs::create_directories(root / "pred");

  RandomStream rng(21, 0);
  ConfusionMatrix expected(kClassCount);
  for (int i = 0; i < 3; ++i) {
    std::vector<uint8_t> gt(64), pred(64);
    for (size_t p = 0; p < 64; ++p) {
      gt[p] = static_cast<uint8_t>(rng.next_int(0, kClassCount - 1));
      pred[p] = rng.next_float() < 0.7f ? gt[p]
                                        : static_cast<uint8_t>(rng.next_int(0, kClassCount - 1));
      expected.at(gt[p], pred[p])++;
    }
    const std::string name = std::to_string(i) + "_label.png";
    write_png_gray8((root / "gt" / name).string(), 8, 8, gt);
    write_png_gray8((root / "pred" / name).string(), 8, 8, pred);
  }

  const DirectoryEvalResult result =
      evaluate_directories((root / "gt").string(), (root / "pred").string(), builtin_palette());
  CHECK(result.image_pairs == 3);
  for (int g = 0; g < kClassCount; ++g)
    for (int p = 0; p < kClassCount; ++p) CHECK(result.matrix.at(g, p) == expected.at(g, p));
  CHECK(result.csv_lines.size() == kClassCount);

  // A missing prediction is an error.
  fs::remove(root / "pred" / "1_label.png");
  CHECK_THROWS_WITH_AS(
      evaluate_directories((root / "gt").string(), (root / "pred").string(), builtin_palette()),
      doctest::Contains("prediction missing"), std::runtime_error);
  fs::remove_all(root);
}

TEST_CASE("palette files load and reject gaps") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "usyn_palette";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "palette.json");
    out << R"({"classes": [{"code": 1, "name": "b"}, {"code": 0, "name": "a"},
               {"code": 255, "name": "void"}]})";
  }
  const ClassPalette p = load_palette_file((dir / "palette.json").string());
  REQUIRE(p.num_classes() == 2);
  CHECK(p.names[0] == "a");
  CHECK(p.names[1] == "b");
  {
    std::ofstream out(dir / "gap.json");
    out << R"({"classes": [{"code": 0, "name": "a"}, {"code": 2, "name": "c"}]})";
  }
  CHECK_THROWS_WITH_AS(load_palette_file((dir / "gap.json").string()),
                       doctest::Contains("contiguous"), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("builtin palette covers the taxonomy in code order") {
  const ClassPalette p = builtin_palette();
  REQUIRE(p.num_classes() == kClassCount);
  CHECK(p.names[0] == "road");
  CHECK(p.names[8] == "sky");
  CHECK(p.names[15] == "bicycle");
}
