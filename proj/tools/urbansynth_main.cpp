#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "urbansynth/annotations.hpp"
#include "urbansynth/eval.hpp"
#include "urbansynth/image_io.hpp"
#include "urbansynth/pathtracer.hpp"
#include "urbansynth/pipeline.hpp"
#include "urbansynth/realize.hpp"
#include "urbansynth/scope.hpp"
#include "urbansynth/version.hpp"
#include "urbansynth/worldgen.hpp"

namespace {

using namespace urbansynth;

int cmd_generate(const std::string& config_path, int workers_override) {
  DatasetConfig cfg =
      config_path.empty() ? DatasetConfig{} : DatasetConfig::load_file(config_path);
  if (workers_override > 0) cfg.worker_count = workers_override;
  const GenerateSummary summary = generate_dataset(cfg);
  std::printf("generated %d, skipped %d, failed %d\n", summary.generated, summary.skipped,
              summary.failed);
  for (const std::string& err : summary.errors) std::fprintf(stderr, "error: %s\n", err.c_str());
  return summary.ok() ? 0 : 1;
}

int cmd_stats(const std::string& dataset_dir, const std::string& csv_path) {
  const auto files = find_label_files(dataset_dir);
  if (files.empty()) {
    std::fprintf(stderr, "no *_label.png files in %s\n", dataset_dir.c_str());
    return 1;
  }
  const ClassHistogram hist = compute_stats(files);
  std::printf("%s", histogram_report(hist).c_str());
  const std::string csv = csv_path.empty()
                              ? (std::filesystem::path(dataset_dir) / "class_histogram.csv").string()
                              : csv_path;
  std::ofstream out(csv, std::ios::binary);
  out << histogram_csv(hist);
  std::printf("histogram written to %s\n", csv.c_str());
  return 0;
}

int cmd_preview(const std::string& scope_path, uint64_t seed, const std::string& out_path,
                int spp, int width, int height) {
  const ScenarioScope scope = scope_path.empty() ? default_scope() : load_scope_file(scope_path);
  const AssetLibrary library = AssetLibrary::builtin();
  const WorldSpec spec = sample_world(scope, seed, library);
  Camera camera = camera_from_spec(spec, width, height);
  const RenderScene scene = RenderScene::build(realize_world(spec, camera, library));

  PathTracerConfig cfg;
  cfg.samples_per_pixel = spp;
  cfg.max_depth = 5;
  cfg.radiance_clamp = 50.0f;
  cfg.seed = seed;
  const HdrFilm film = render(scene, camera, cfg);
  write_png_rgb8(out_path, tonemap(film, camera.exposure));
  std::printf("preview (seed %llu, %d spp) written to %s\n",
              static_cast<unsigned long long>(seed), spp, out_path.c_str());
  return 0;
}

int cmd_eval(const std::string& gt_dir, const std::string& pred_dir,
             const std::string& palette_path, bool absent_as_zero, const std::string& csv_path) {
  const ClassPalette palette =
      palette_path.empty() ? builtin_palette() : load_palette_file(palette_path);
  const DirectoryEvalResult result = evaluate_directories(gt_dir, pred_dir, palette);

  std::string csv = "name,iou\n";
  for (const std::string& line : result.csv_lines) csv += line + "\n";
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    out << csv;
  } else {
    std::printf("%s", csv.c_str());
  }
  const double mean = absent_as_zero ? result.report.mean_absent_zero
                                     : result.report.mean_defined;
  std::printf("mean IoU over %d classes (%s): %.4f (%d image pairs)\n", palette.num_classes(),
              absent_as_zero ? "absent as zero" : "absent excluded", mean, result.image_pairs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"urbansynth: procedural street-scene dataset generator"};
  app.set_version_flag("--version", urbansynth::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  int workers_override = 0;
  auto* gen = app.add_subcommand("generate", "render a dataset from a config file");
  gen->add_option("--config", config_path, "JSON config file (defaults when omitted)");
  gen->add_option("--workers", workers_override,
                  "worker override (also via URBANSYNTH_WORKERS)");

  std::string dataset_dir, stats_csv;
  auto* stats = app.add_subcommand("stats", "per-class pixel histogram of a dataset");
  stats->add_option("--dataset", dataset_dir, "dataset directory")->required();
  stats->add_option("--csv", stats_csv, "CSV output path (default <dataset>/class_histogram.csv)");

  std::string scope_path, preview_out = "preview.png";
  uint64_t seed = 1;
  int spp = 16, pw = 640, ph = 360;
  auto* preview = app.add_subcommand("preview", "render one low-spp image");
  preview->add_option("--scope", scope_path, "scope JSON (defaults when omitted)");
  preview->add_option("--seed", seed, "world seed")->required();
  preview->add_option("--out", preview_out, "output PNG path");
  preview->add_option("--spp", spp, "samples per pixel (default 16)");
  preview->add_option("--width", pw, "image width (default 640)");
  preview->add_option("--height", ph, "image height (default 360)");

  std::string gt_dir, pred_dir, palette_path, eval_csv;
  bool absent_as_zero = false;
  auto* eval_cmd = app.add_subcommand("eval", "confusion matrix + mean IoU of two label dirs");
  eval_cmd->add_option("--gt", gt_dir, "ground-truth label directory")->required();
  eval_cmd->add_option("--pred", pred_dir, "prediction label directory")->required();
  eval_cmd->add_option("--classes", palette_path, "palette JSON (default: built-in 16 classes)");
  eval_cmd->add_flag("--absent-as-zero", absent_as_zero,
                     "count classes absent from both maps as IoU 0 in the mean");
  eval_cmd->add_option("--csv", eval_csv, "write per-class CSV here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(config_path, workers_override);
    if (stats->parsed()) return cmd_stats(dataset_dir, stats_csv);
    if (preview->parsed()) return cmd_preview(scope_path, seed, preview_out, spp, pw, ph);
    if (eval_cmd->parsed())
      return cmd_eval(gt_dir, pred_dir, palette_path, absent_as_zero, eval_csv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
