#include "urbansynth/pipeline.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "urbansynth/annotations.hpp"
#include "urbansynth/image_io.hpp"
#include "urbansynth/pathtracer.hpp"
#include "urbansynth/realize.hpp"
#include "urbansynth/scope.hpp"
#include "urbansynth/version.hpp"
#include "urbansynth/worldgen.hpp"

namespace urbansynth {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void DatasetConfig::validate() const {
  if (image_count < 1) throw std::invalid_argument("config: image_count must be >= 1");
  if (width < 1 || height < 1) throw std::invalid_argument("config: resolution must be positive");
  if (samples_per_pixel < 1)
    throw std::invalid_argument("config: samples_per_pixel must be >= 1");
  if (max_depth < 1) throw std::invalid_argument("config: max_depth must be >= 1");
  if (russian_roulette_start_depth > max_depth)
    throw std::invalid_argument("config: russian_roulette_start_depth exceeds max_depth");
  if (output_directory.empty()) throw std::invalid_argument("config: output_directory empty");
}

DatasetConfig DatasetConfig::from_json_text(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  DatasetConfig c;
  if (j.contains("image_count")) c.image_count = j.at("image_count").get<int>();
  if (j.contains("resolution")) {
    c.width = j.at("resolution").at(0).get<int>();
    c.height = j.at("resolution").at(1).get<int>();
  }
  if (j.contains("samples_per_pixel")) c.samples_per_pixel = j.at("samples_per_pixel").get<int>();
  if (j.contains("max_depth")) c.max_depth = j.at("max_depth").get<int>();
  if (j.contains("russian_roulette_start_depth"))
    c.russian_roulette_start_depth = j.at("russian_roulette_start_depth").get<int>();
  if (j.contains("radiance_clamp")) c.radiance_clamp = j.at("radiance_clamp").get<float>();
  if (j.contains("base_seed")) c.base_seed = j.at("base_seed").get<uint64_t>();
  if (j.contains("output_directory"))
    c.output_directory = j.at("output_directory").get<std::string>();
  if (j.contains("scope_file")) c.scope_file = j.at("scope_file").get<std::string>();
  if (j.contains("asset_directory"))
    c.asset_directory = j.at("asset_directory").get<std::string>();
  if (j.contains("worker_count")) c.worker_count = j.at("worker_count").get<int>();
  if (j.contains("emit_hdr")) c.emit_hdr = j.at("emit_hdr").get<bool>();
  if (j.contains("psf")) {
    const auto& p = j.at("psf");
    const std::string kind = p.at("type").get<std::string>();
    if (kind == "none") {
      c.psf = Psf::none();
    } else if (kind == "gaussian") {
      c.psf = Psf::gaussian(p.value("sigma_px", 0.6f));
    } else if (kind == "halo") {
      c.psf = Psf::halo(p.value("weight", 0.1f), p.value("radius_px", 8.0f));
    } else {
      throw std::invalid_argument("config: psf.type must be none|gaussian|halo");
    }
  }
  c.validate();
  return c;
}

DatasetConfig DatasetConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string DatasetConfig::to_json_text() const {
  ordered_json j;
  j["image_count"] = image_count;
  j["resolution"] = {width, height};
  j["samples_per_pixel"] = samples_per_pixel;
  j["max_depth"] = max_depth;
  j["russian_roulette_start_depth"] = russian_roulette_start_depth;
  j["radiance_clamp"] = radiance_clamp;
  j["base_seed"] = base_seed;
  j["output_directory"] = output_directory;
  j["scope_file"] = scope_file;
  j["asset_directory"] = asset_directory;
  j["worker_count"] = worker_count;
  j["emit_hdr"] = emit_hdr;
  switch (psf.kind) {
    case Psf::Kind::none:
      j["psf"] = {{"type", "none"}};
      break;
    case Psf::Kind::gaussian:
      j["psf"] = {{"type", "gaussian"}, {"sigma_px", psf.sigma_px}};
      break;
    case Psf::Kind::halo:
      j["psf"] = {{"type", "halo"}, {"weight", psf.weight}, {"radius_px", psf.radius_px}};
      break;
  }
  return j.dump(2);
}

int effective_worker_count(const DatasetConfig& config) {
  if (const char* env = std::getenv("URBANSYNTH_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  if (config.worker_count > 0) return config.worker_count;
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return hw > 0 ? hw : 1;
}

std::string image_prefix(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06d", index);
  return buf;
}

namespace {

struct ImageFiles {
  std::string rgb, label, instance, depth, hdr;
};

ImageFiles files_for(const DatasetConfig& cfg, int index, bool raw_instance) {
  const std::string p = image_prefix(index);
  ImageFiles f;
  f.rgb = p + "_rgb.png";
  f.label = p + "_label.png";
  f.instance = raw_instance ? p + "_instance.raw" : p + "_instance.png";
  f.depth = p + "_depth.pfm";
  if (cfg.emit_hdr) f.hdr = p + "_hdr.pfm";
  return f;
}

void write_dataset_header(const DatasetConfig& cfg, const ScenarioScope& scope) {
  ordered_json j;
  j["generator"] = "urbansynth";
  j["version"] = kVersion;
  ordered_json classes = ordered_json::array();
  for (int c = 0; c < kClassCount; ++c) {
    classes.push_back({{"code", c},
                       {"name", class_names()[c]},
                       {"color", {class_colors()[c][0], class_colors()[c][1],
                                  class_colors()[c][2]}}});
  }
  classes.push_back({{"code", kVoidCode}, {"name", "void"}, {"color", {0, 0, 0}}});
  j["classes"] = std::move(classes);
  j["config"] = ordered_json::parse(cfg.to_json_text());
  j["scope"] = ordered_json::parse(scope_to_json_text(scope));
  std::ofstream out(fs::path(cfg.output_directory) / "dataset.json", std::ios::binary);
  out << j.dump(2) << "\n";
}

// One record line per image, flushed strictly in index order so clean runs
// produce byte-identical manifests regardless of worker count.
class ManifestWriter {
 public:
  explicit ManifestWriter(const std::string& path) {
    out_.open(path, std::ios::binary | std::ios::app);
    if (!out_) throw std::runtime_error("cannot open manifest for append: " + path);
  }

  void submit(int index, std::string line) {
    std::lock_guard<std::mutex> lock(mutex_);
    staged_[index] = std::move(line);
    while (!staged_.empty() && staged_.begin()->first == next_) {
      out_ << staged_.begin()->second << "\n";
      out_.flush();
      staged_.erase(staged_.begin());
      next_++;
    }
  }

 private:
  std::ofstream out_;
  std::mutex mutex_;
  std::map<int, std::string> staged_;
  int next_ = 0;
};

}  // namespace

GenerateSummary generate_dataset(const DatasetConfig& cfg) {
  cfg.validate();
  const ScenarioScope scope =
      cfg.scope_file.empty() ? default_scope() : load_scope_file(cfg.scope_file);
  const AssetLibrary library = cfg.asset_directory.empty()
                                   ? AssetLibrary::builtin()
                                   : AssetLibrary::load_directory(cfg.asset_directory);

  std::error_code ec;
  fs::create_directories(cfg.output_directory, ec);
  if (ec || !fs::is_directory(cfg.output_directory))
    throw std::runtime_error("cannot create output directory: " + cfg.output_directory);
  {
    std::ofstream probe(fs::path(cfg.output_directory) / ".write_probe", std::ios::binary);
    if (!probe) throw std::runtime_error("output directory not writable: " + cfg.output_directory);
  }
  fs::remove(fs::path(cfg.output_directory) / ".write_probe", ec);

  write_dataset_header(cfg, scope);

  const fs::path manifest_path = fs::path(cfg.output_directory) / "manifest.jsonl";

  // Resume: collect valid records whose files all exist.
  std::map<int, ordered_json> existing;
  if (fs::exists(manifest_path)) {
    std::ifstream in(manifest_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ordered_json rec;
      try {
        rec = ordered_json::parse(line);
      } catch (const std::exception&) {
        continue;  // truncated tail line from an interrupted run
      }
      if (!rec.contains("index") || !rec.contains("status")) continue;
      const int idx = rec.at("index").get<int>();
      if (idx < 0 || idx >= cfg.image_count) continue;
      if (rec.at("status") != "ok") continue;
      bool complete = true;
      for (const auto& [key, value] : rec.at("files").items()) {
        (void)key;
        if (!fs::exists(fs::path(cfg.output_directory) / value.get<std::string>()))
          complete = false;
      }
      if (complete) existing.emplace(idx, std::move(rec));
    }
  }

  GenerateSummary summary;
  summary.skipped = static_cast<int>(existing.size());

  ManifestWriter writer(manifest_path.string());
  std::mutex summary_mutex;
  std::atomic<int> next_image{0};

  const int workers = effective_worker_count(cfg);
  const int render_threads = workers > 1 ? 1 : 0;  // avoid oversubscription

  auto run_image = [&](int index) {
    if (auto it = existing.find(index); it != existing.end()) {
      writer.submit(index, it->second.dump());
      return;
    }
    const uint64_t seed = cfg.base_seed + static_cast<uint64_t>(index);
    ordered_json rec;
    rec["index"] = index;
    rec["seed"] = seed;
    try {
      const WorldSpec spec = sample_world(scope, seed, library);
      Camera camera = camera_from_spec(spec, cfg.width, cfg.height);
      camera.psf = cfg.psf;

      const RenderScene scene = RenderScene::build(realize_world(spec, camera, library));

      PathTracerConfig rcfg;
      rcfg.samples_per_pixel = cfg.samples_per_pixel;
      rcfg.max_depth = cfg.max_depth;
      rcfg.russian_roulette_start_depth = cfg.russian_roulette_start_depth;
      rcfg.radiance_clamp = cfg.radiance_clamp;
      rcfg.seed = seed;

      const HdrFilm film = render(scene, camera, rcfg, render_threads);
      const HdrFilm filtered = apply_psf(film, camera.psf);
      const ImageU8 rgb = tonemap(filtered, camera.exposure);
      const Annotations ann = render_annotations(scene, camera);

      const bool raw_instance = ann.instance.max_code() >= 65536;
      const ImageFiles files = files_for(cfg, index, raw_instance);
      const fs::path dir = cfg.output_directory;

      write_png_rgb8((dir / files.rgb).string(), rgb);
      write_png_gray8((dir / files.label).string(), ann.label.width, ann.label.height,
                      ann.label.codes);
      if (raw_instance) {
        write_raw32((dir / files.instance).string(), ann.instance.width, ann.instance.height,
                    ann.instance.codes);
      } else {
        std::vector<uint16_t> codes16(ann.instance.codes.size());
        for (size_t i = 0; i < codes16.size(); ++i)
          codes16[i] = static_cast<uint16_t>(ann.instance.codes[i]);
        write_png_gray16((dir / files.instance).string(), ann.instance.width,
                         ann.instance.height, codes16);
      }
      write_pfm_depth((dir / files.depth).string(), ann.depth.width, ann.depth.height,
                      ann.depth.meters);
      if (cfg.emit_hdr) write_pfm_rgb((dir / files.hdr).string(), filtered);

      std::array<uint64_t, kClassCount> class_pixels{};
      for (uint8_t code : ann.label.codes) class_pixels[code]++;

      rec["status"] = "ok";
      ordered_json files_json;
      files_json["rgb"] = files.rgb;
      files_json["label"] = files.label;
      files_json["instance"] = files.instance;
      files_json["depth"] = files.depth;
      if (cfg.emit_hdr) files_json["hdr"] = files.hdr;
      rec["files"] = std::move(files_json);
      rec["camera"] = {{"resolution", {cfg.width, cfg.height}},
                       {"fov", camera.vertical_fov_deg},
                       {"exposure", camera.exposure}};
      rec["render"] = {{"samples_per_pixel", cfg.samples_per_pixel},
                       {"max_depth", cfg.max_depth},
                       {"radiance_clamp", cfg.radiance_clamp},
                       {"rejected_samples", film.rejected_count()}};
      ordered_json pixels;
      for (int c = 0; c < kClassCount; ++c) pixels[class_names()[c]] = class_pixels[c];
      rec["class_pixels"] = std::move(pixels);
      rec["world"] = ordered_json::parse(worldspec_to_json_text(spec));

      std::lock_guard<std::mutex> lock(summary_mutex);
      summary.generated++;
    } catch (const std::exception& e) {
      rec["status"] = "error";
      rec["error"] = e.what();
      std::lock_guard<std::mutex> lock(summary_mutex);
      summary.failed++;
      summary.errors.push_back("image " + std::to_string(index) + ": " + e.what());
    }
    writer.submit(index, rec.dump());
  };

  auto worker_loop = [&]() {
    for (;;) {
      const int index = next_image.fetch_add(1);
      if (index >= cfg.image_count) return;
      run_image(index);
    }
  };

  if (workers == 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker_loop);
    for (auto& t : pool) t.join();
  }

  // Rewrite the manifest as exactly one ordered record per image (drops
  // stale duplicates from interrupted runs). Atomic replace.
  {
    std::ifstream in(manifest_path);
    std::map<int, std::string> records;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const ordered_json rec = ordered_json::parse(line);
        const int idx = rec.at("index").get<int>();
        if (idx >= 0 && idx < cfg.image_count) records[idx] = line;
      } catch (const std::exception&) {
        continue;
      }
    }
    in.close();
    const fs::path tmp = manifest_path.string() + ".tmp";
    std::ofstream out(tmp, std::ios::binary);
    for (const auto& [idx, text] : records) out << text << "\n";
    out.close();
    fs::rename(tmp, manifest_path);
  }

  return summary;
}

std::vector<std::string> find_label_files(const std::string& dataset_dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dataset_dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > 10 && name.substr(name.size() - 10) == "_label.png")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

ClassHistogram compute_stats(const std::vector<std::string>& label_files) {
  ClassHistogram hist;
  for (const std::string& path : label_files) {
    const GrayImage8 img = read_png_gray8(path);
    for (uint8_t code : img.data) {
      if (code == kVoidCode) {
        hist.void_pixels++;
      } else if (code < kClassCount) {
        hist.counts[code]++;
      } else {
        throw std::runtime_error(path + ": invalid class code " + std::to_string(code));
      }
    }
  }
  return hist;
}

std::string histogram_csv(const ClassHistogram& hist) {
  std::ostringstream out;
  out << "code,name,pixels\n";
  for (int c = 0; c < kClassCount; ++c)
    out << c << "," << class_names()[c] << "," << hist.counts[c] << "\n";
  out << 255 << ",void," << hist.void_pixels << "\n";
  return out.str();
}

std::string histogram_report(const ClassHistogram& hist) {
  uint64_t max_count = 1;
  for (uint64_t c : hist.counts) max_count = std::max(max_count, c);
  std::ostringstream out;
  out << "annotated pixels per class (total " << hist.total() << ")\n";
  for (int c = 0; c < kClassCount; ++c) {
    const int bar = static_cast<int>(50.0 * hist.counts[c] / max_count);
    out << "  " << class_names()[c];
    for (size_t pad = class_names()[c].size(); pad < 14; ++pad) out << ' ';
    out << std::string(bar, '#') << " " << hist.counts[c] << "\n";
  }
  return out.str();
}

}  // namespace urbansynth
