#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "dirac/harness.hpp"
#include "dirac/rough_data.hpp"

namespace dirac {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void put_le(std::ostream& out, double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

double get_le(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) {
    throw std::runtime_error("reference file truncated");
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  double x;
  std::memcpy(&x, &bits, sizeof x);
  return x;
}

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string reference_header(const StudyConfig& cfg) {
  std::string h;
  h += "N=" + std::to_string(cfg.n_modes);
  h += " T=" + fmt17(cfg.t_final);
  h += " tau_ref=" + fmt17(cfg.reference_tau);
  h += " potential=";
  h += cfg.potential == PotentialKind::external ? "external" : "poisson";
  h += " lambda=" + fmt17(cfg.lambda);
  h += " theta=" + (cfg.initial == InitialKind::smooth ? std::string("smooth") : fmt17(cfg.theta));
  h += " seed=" + std::to_string(cfg.seed);
  h += " convention=fft-order-normalized rng=" + std::string(kRngIdentifier);
  h += " scheme=" + std::string(to_string(cfg.reference_scheme));
  h += cfg.dealias ? " dealias=1" : " dealias=0";
  return h;
}

void write_reference_file(const std::string& path, const std::string& header,
                          const SpinorField& solution) {
  if (header.find('\n') != std::string::npos) {
    throw std::invalid_argument("reference header must be a single line");
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  // Write to a temporary and rename so an interrupted run never leaves a
  // half-written file under the final name.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write reference file " + tmp);
    out << kReferenceMagic << '\n' << header << '\n';
    const SpinorField s = solution.to_spectral();
    for (const ComplexField* c : {&s.phi1, &s.phi2}) {
      for (Complex z : c->values()) {
        put_le(out, z.real());
        put_le(out, z.imag());
      }
    }
    if (!out) throw std::runtime_error("error writing reference file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

ReferenceFile read_reference_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open reference file " + path);
  std::string magic, header;
  if (!std::getline(in, magic) || magic != kReferenceMagic) {
    throw std::runtime_error("not a reference file: " + path);
  }
  if (!std::getline(in, header)) throw std::runtime_error("reference file has no header");
  const auto pos = header.find("N=");
  if (pos != 0) throw std::runtime_error("reference header lacks N=");
  const int n = std::stoi(header.substr(2));
  SpectralGrid grid(n);
  std::vector<Complex> c1(grid.size()), c2(grid.size());
  for (auto* c : {&c1, &c2}) {
    for (auto& z : *c) {
      const double re = get_le(in);
      const double im = get_le(in);
      z = {re, im};
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw std::runtime_error("trailing bytes in reference file " + path);
  }
  return {header,
          {ComplexField(grid, std::move(c1), Representation::spectral),
           ComplexField(grid, std::move(c2), Representation::spectral)}};
}

std::string reference_cache_path(const StudyConfig& cfg) {
  if (!cfg.reference_path.empty()) return cfg.reference_path;
  if (cfg.reference_dir.empty()) return {};
  char name[48];
  std::snprintf(name, sizeof name, "ref_%016llx.bin",
                static_cast<unsigned long long>(fnv1a(reference_header(cfg))));
  return (std::filesystem::path(cfg.reference_dir) / name).string();
}

ReferenceResult reference_solution(const StudyConfig& cfg) {
  const std::string header = reference_header(cfg);
  const std::string path = reference_cache_path(cfg);
  if (!path.empty() && std::filesystem::exists(path)) {
    try {
      ReferenceFile f = read_reference_file(path);
      if (f.header == header) return {f.solution.to_physical(), true, path};
      std::cerr << "warning: reference " << path
                << " was computed for different parameters; recomputing\n";
    } catch (const std::exception& e) {
      std::cerr << "warning: unreadable reference " << path << " (" << e.what()
                << "); recomputing\n";
    }
  }

  const auto model = model_config(cfg);
  EvolveResult r =
      evolve(initial_state(cfg), cfg.reference_scheme, cfg.reference_tau, cfg.t_final, model);
  if (r.status != RunStatus::ok) {
    throw std::runtime_error("reference trajectory failed: " + r.message);
  }
  // Hand back exactly what a later cache read would produce, so a study gives
  // the same bytes whether or not its reference was already on disk.
  const SpinorField coeffs = r.final_state.to_spectral();
  if (!path.empty()) write_reference_file(path, header, coeffs);
  return {coeffs.to_physical(), false, path};
}

}  // namespace dirac
