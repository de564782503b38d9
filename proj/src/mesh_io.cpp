#include "urbansynth/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace urbansynth {

namespace {

const char* material_kind_name(MaterialKind k) {
  switch (k) {
    case MaterialKind::lambertian:
      return "lambertian";
    case MaterialKind::rough_specular:
      return "rough";
    case MaterialKind::emissive:
      return "emissive";
  }
  return "lambertian";
}

void write_float(std::ostream& out, float v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  out << buf;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("usmesh: " + what);
}

std::string expect_token(std::istream& in, const char* context) {
  std::string tok;
  if (!(in >> tok)) fail(std::string("unexpected end of input, expected ") + context);
  return tok;
}

float expect_float(std::istream& in, const char* context) {
  float v;
  if (!(in >> v)) fail(std::string("expected number for ") + context);
  return v;
}

uint32_t expect_u32(std::istream& in, const char* context) {
  long long v;
  if (!(in >> v) || v < 0) fail(std::string("expected non-negative integer for ") + context);
  return static_cast<uint32_t>(v);
}

}  // namespace

std::string prototype_to_text(const Prototype& proto) {
  std::ostringstream out;
  out << "usmesh 1\n";
  out << "name " << proto.name << "\n";
  out << "parts " << proto.parts.size() << "\n";
  for (const PrototypePart& part : proto.parts) {
    out << "part\n";
    out << "class " << class_names()[class_code(part.class_id)] << "\n";
    out << "paintable " << (part.paintable ? 1 : 0) << "\n";
    out << "material " << material_kind_name(part.material.kind);
    const Spectrum& c =
        part.material.kind == MaterialKind::emissive ? part.material.emission : part.material.albedo;
    for (float v : {c.r, c.g, c.b}) {
      out << ' ';
      write_float(out, v);
    }
    if (part.material.kind == MaterialKind::rough_specular) {
      out << ' ';
      write_float(out, part.material.roughness);
    }
    out << "\n";
    out << "vertices " << part.mesh.positions.size() << "\n";
    for (size_t i = 0; i < part.mesh.positions.size(); ++i) {
      const Vec3& p = part.mesh.positions[i];
      const Vec3& n = part.mesh.normals[i];
      const float vals[6] = {p.x, p.y, p.z, n.x, n.y, n.z};
      for (int k = 0; k < 6; ++k) {
        if (k) out << ' ';
        write_float(out, vals[k]);
      }
      out << "\n";
    }
    out << "triangles " << part.mesh.triangle_count() << "\n";
    for (size_t t = 0; t < part.mesh.triangle_count(); ++t) {
      out << part.mesh.indices[3 * t] << ' ' << part.mesh.indices[3 * t + 1] << ' '
          << part.mesh.indices[3 * t + 2] << "\n";
    }
  }
  return out.str();
}

Prototype prototype_from_text(const std::string& text) {
  std::istringstream in(text);
  if (expect_token(in, "magic") != "usmesh") fail("missing 'usmesh' magic");
  if (expect_u32(in, "version") != 1) fail("unsupported version");
  if (expect_token(in, "'name'") != "name") fail("expected 'name'");
  Prototype proto;
  proto.name = expect_token(in, "prototype name");
  if (expect_token(in, "'parts'") != "parts") fail("expected 'parts'");
  const uint32_t part_count = expect_u32(in, "part count");

  for (uint32_t pi = 0; pi < part_count; ++pi) {
    if (expect_token(in, "'part'") != "part") fail("expected 'part'");
    PrototypePart part;

    if (expect_token(in, "'class'") != "class") fail("expected 'class'");
    part.class_id = class_from_name(expect_token(in, "class name"));

    if (expect_token(in, "'paintable'") != "paintable") fail("expected 'paintable'");
    part.paintable = expect_u32(in, "paintable flag") != 0;

    if (expect_token(in, "'material'") != "material") fail("expected 'material'");
    const std::string kind = expect_token(in, "material kind");
    const float r = expect_float(in, "material r");
    const float g = expect_float(in, "material g");
    const float b = expect_float(in, "material b");
    if (kind == "lambertian") {
      part.material = Material::make_lambertian({r, g, b});
    } else if (kind == "rough") {
      part.material = Material::make_rough_specular({r, g, b}, expect_float(in, "roughness"));
    } else if (kind == "emissive") {
      part.material = Material::make_emissive({r, g, b});
    } else {
      fail("unknown material kind '" + kind + "'");
    }

    if (expect_token(in, "'vertices'") != "vertices") fail("expected 'vertices'");
    const uint32_t nverts = expect_u32(in, "vertex count");
    part.mesh.positions.resize(nverts);
    part.mesh.normals.resize(nverts);
    for (uint32_t i = 0; i < nverts; ++i) {
      Vec3& p = part.mesh.positions[i];
      Vec3& n = part.mesh.normals[i];
      p.x = expect_float(in, "vertex x");
      p.y = expect_float(in, "vertex y");
      p.z = expect_float(in, "vertex z");
      n.x = expect_float(in, "normal x");
      n.y = expect_float(in, "normal y");
      n.z = expect_float(in, "normal z");
    }

    if (expect_token(in, "'triangles'") != "triangles") fail("expected 'triangles'");
    const uint32_t ntris = expect_u32(in, "triangle count");
    part.mesh.indices.resize(3 * static_cast<size_t>(ntris));
    for (uint32_t i = 0; i < 3 * ntris; ++i) {
      const uint32_t idx = expect_u32(in, "index");
      if (idx >= nverts)
        fail("index " + std::to_string(idx) + " out of range (have " + std::to_string(nverts) +
             " vertices)");
      part.mesh.indices[i] = idx;
    }
    part.mesh.class_id = part.class_id;
    proto.parts.push_back(std::move(part));
  }
  return proto;
}

void write_prototype_file(const std::string& path, const Prototype& proto) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open for writing: " + path);
  out << prototype_to_text(proto);
  if (!out) fail("write failed: " + path);
}

Prototype read_prototype_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return prototype_from_text(buf.str());
}

}  // namespace urbansynth
