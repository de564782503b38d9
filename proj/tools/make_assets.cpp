// Writes the built-in prototype library to a directory in the .usmesh text
// format, one file per (group, variant). The shipped assets/ directory is
// the output of this tool.
#include <cstdio>
#include <filesystem>

#include "urbansynth/assets.hpp"
#include "urbansynth/mesh_io.hpp"

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : "assets";
  std::filesystem::create_directories(out_dir);

  const urbansynth::AssetLibrary library = urbansynth::AssetLibrary::builtin();
  int written = 0;
  for (const auto& [group, variants] : library.groups()) {
    for (size_t v = 0; v < variants.size(); ++v) {
      const std::string path =
          (std::filesystem::path(out_dir) / (group + "_" + std::to_string(v) + ".usmesh"))
              .string();
      urbansynth::write_prototype_file(path, variants[v]);
      written++;
    }
  }
  std::printf("wrote %d prototype files to %s\n", written, out_dir.c_str());
  return 0;
}
