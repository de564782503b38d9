#include <set>
#include <fstream>
#include <atomic>

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "urbansynth/image_io.hpp"
#include "urbansynth/pipeline.hpp"
#include "urbansynth/rng.hpp"

using namespace urbansynth;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const char* tag) {
    static std::atomic<uint32_t> counter{0};
    path = fs::temp_directory_path() /
           (std::string("usyn_pipe_") + tag + "_" + std::to_string(counter.fetch_add(1)));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

DatasetConfig tiny_config(const std::string& out_dir, int images = 2) {
  DatasetConfig cfg;
  cfg.image_count = images;
  cfg.width = 64;
  cfg.height = 36;
  cfg.samples_per_pixel = 4;
  cfg.max_depth = 3;
  cfg.russian_roulette_start_depth = 3;
  cfg.base_seed = 7;
  cfg.output_directory = out_dir;
  cfg.worker_count = 1;
  cfg.psf = Psf::gaussian(0.5f);
  return cfg;
}

std::string file_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Per-image outputs plus the manifest. dataset.json echoes the config
// (output directory, worker count), so it is excluded from byte comparisons.
std::vector<std::string> dataset_files(const fs::path& dir) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name != "dataset.json") names.push_back(name);
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

TEST_CASE("config json round trip and validation") {
  DatasetConfig cfg;
  cfg.image_count = 5;
  cfg.psf = Psf::halo(0.2f, 4.0f);
  const DatasetConfig back = DatasetConfig::from_json_text(cfg.to_json_text());
  CHECK(back.image_count == 5);
  CHECK(back.psf.kind == Psf::Kind::halo);
  CHECK(back.psf.weight == doctest::Approx(0.2f));

  CHECK_THROWS_AS(DatasetConfig::from_json_text(R"({"image_count": 0})"), std::invalid_argument);
  CHECK_THROWS_AS(DatasetConfig::from_json_text(R"({"psf": {"type": "bokeh"}})"),
                  std::invalid_argument);
}

TEST_CASE("single image generation is reproducible byte for byte") {
  TempDir a("bytes_a"), b("bytes_b");
  DatasetConfig cfg = tiny_config(a.path.string(), 1);
  REQUIRE(generate_dataset(cfg).ok());
  cfg.output_directory = b.path.string();
  REQUIRE(generate_dataset(cfg).ok());

  const auto names = dataset_files(a.path);
  CHECK(names == dataset_files(b.path));
  for (const auto& name : names) CHECK(file_bytes(a.path / name) == file_bytes(b.path / name));
}

TEST_CASE("worker counts do not change any output byte") {
  TempDir a("w1"), b("w4");
  DatasetConfig cfg = tiny_config(a.path.string(), 4);
  cfg.worker_count = 1;
  REQUIRE(generate_dataset(cfg).ok());
  cfg.output_directory = b.path.string();
  cfg.worker_count = 4;
  REQUIRE(generate_dataset(cfg).ok());

  const auto names = dataset_files(a.path);
  REQUIRE(names == dataset_files(b.path));
  for (const auto& name : names) CHECK(file_bytes(a.path / name) == file_bytes(b.path / name));
}

TEST_CASE("interrupted runs resume to a complete, duplicate-free manifest") {
  TempDir dir("resume");
  DatasetConfig cfg = tiny_config(dir.path.string(), 3);
  REQUIRE(generate_dataset(cfg).ok());

  const std::string fresh_rgb = file_bytes(dir.path / "000001_rgb.png");

  // Simulate an interruption: one image's files vanish, the manifest keeps a
  // truncated trailing line.
  fs::remove(dir.path / "000001_rgb.png");
  {
    std::ofstream m(dir.path / "manifest.jsonl", std::ios::binary | std::ios::app);
    m << "{\"index\": 2, \"truncated";
  }

  const GenerateSummary resumed = generate_dataset(cfg);
  CHECK(resumed.ok());
  CHECK(resumed.skipped == 2);
  CHECK(resumed.generated == 1);
  CHECK(file_bytes(dir.path / "000001_rgb.png") == fresh_rgb);

  // Manifest: exactly image_count records, indices 0..n-1, each once.
  std::ifstream in(dir.path / "manifest.jsonl");
  std::vector<int> indices;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    indices.push_back(nlohmann::json::parse(line).at("index").get<int>());
  }
  CHECK(indices == std::vector<int>{0, 1, 2});
}

TEST_CASE("manifest references every emitted file exactly once") {
  TempDir dir("manifest");
  DatasetConfig cfg = tiny_config(dir.path.string(), 2);
  cfg.emit_hdr = true;
  REQUIRE(generate_dataset(cfg).ok());

  std::set<std::string> referenced;
  std::ifstream in(dir.path / "manifest.jsonl");
  std::string line;
  int records = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records++;
    const auto rec = nlohmann::json::parse(line);
    CHECK(rec.at("status") == "ok");
    for (const auto& [key, value] : rec.at("files").items()) {
      (void)key;
      const std::string name = value.get<std::string>();
      CHECK(fs::exists(dir.path / name));
      CHECK(referenced.insert(name).second);  // exactly once
    }
    // Per-class pixel counts in the record sum to the frame area.
    uint64_t total = 0;
    for (const auto& [cls, count] : rec.at("class_pixels").items()) {
      (void)cls;
      total += count.get<uint64_t>();
    }
    CHECK(total == 64u * 36u);
  }
  CHECK(records == 2);

  // Every emitted image file is referenced.
  for (const auto& name : dataset_files(dir.path)) {
    if (name == "manifest.jsonl" || name == "dataset.json" || name == "class_histogram.csv")
      continue;
    CHECK(referenced.count(name) == 1);
  }

  // Dataset header carries the palette.
  const auto header = nlohmann::json::parse(file_bytes(dir.path / "dataset.json"));
  CHECK(header.at("classes").size() == kClassCount + 1);  // + void
  CHECK(header.at("classes")[8].at("name") == "sky");
}

TEST_CASE("stats: all-sky image counts and conservation") {
  TempDir dir("stats");
  fs::create_directories(dir.path);
  // A handmade 4x4 all-sky label map.
  std::vector<uint8_t> sky(16, 8);
  write_png_gray8((dir.path / "000000_label.png").string(), 4, 4, sky);
  const ClassHistogram hist = compute_stats({(dir.path / "000000_label.png").string()});
  CHECK(hist.counts[8] == 16);
  for (int c = 0; c < kClassCount; ++c)
    if (c != 8) CHECK(hist.counts[c] == 0);
  CHECK(hist.total() == 16);
}

TEST_CASE("stats match a naive recount on generated labels") {
  TempDir dir("recount");
  DatasetConfig cfg = tiny_config(dir.path.string(), 2);
  REQUIRE(generate_dataset(cfg).ok());
  const auto files = find_label_files(dir.path.string());
  REQUIRE(files.size() == 2);

  const ClassHistogram hist = compute_stats(files);
  // Naive recount.
  std::array<uint64_t, kClassCount> recount{};
  for (const auto& f : files) {
    const GrayImage8 img = read_png_gray8(f);
    for (uint8_t c : img.data) recount[c]++;
  }
  for (int c = 0; c < kClassCount; ++c) CHECK(hist.counts[c] == recount[c]);
  CHECK(hist.total() == 2u * 64u * 36u);
  CHECK(hist.void_pixels == 0);
}

TEST_CASE("failed images are recorded and the exit status reflects them") {
  TempDir dir("fail");
  DatasetConfig cfg = tiny_config(dir.path.string(), 1);
  // An unsatisfiable scope file: too many cars for one narrow lane.
  const fs::path scope_path = dir.path.parent_path() / "usyn_bad_scope.json";
  std::ofstream(scope_path) << R"({"road": {"width": [6, 6], "lanes": [1, 1]},
    "car": {"count": [400, 400], "placement": ["lane"]}})";
  cfg.scope_file = scope_path.string();

  const GenerateSummary summary = generate_dataset(cfg);
  CHECK(summary.failed == 1);
  CHECK(!summary.ok());
  REQUIRE(summary.errors.size() == 1);
  CHECK(summary.errors[0].find("could not place") != std::string::npos);

  std::ifstream in(dir.path / "manifest.jsonl");
  std::string line;
  std::getline(in, line);
  const auto rec = nlohmann::json::parse(line);
  CHECK(rec.at("status") == "error");
  fs::remove(scope_path);
}

TEST_CASE("environment variable overrides the worker count") {
  DatasetConfig cfg;
  cfg.worker_count = 3;
  CHECK(effective_worker_count(cfg) == 3);
  setenv("URBANSYNTH_WORKERS", "5", 1);
  CHECK(effective_worker_count(cfg) == 5);
  unsetenv("URBANSYNTH_WORKERS");
  CHECK(effective_worker_count(cfg) == 3);
}
