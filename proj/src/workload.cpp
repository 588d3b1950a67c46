#include "vmcsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "vmcsim/rng.hpp"

namespace vmcsim {

std::uint64_t TraceSet::checksum() const {
  std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a
  auto mix = [&h](const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 0x100000001B3ull;
    }
  };
  for (const auto& row : per_vm) {
    for (double v : row) mix(&v, sizeof(v));
  }
  return h;
}

TraceSet generate_synthetic(const SyntheticSpec& spec, int vm_count) {
  if (vm_count < 1) throw std::invalid_argument("vm_count must be >= 1");
  if (!(spec.lo >= 0 && spec.lo <= spec.hi && spec.hi <= 1)) {
    throw std::invalid_argument("require 0 <= lo <= hi <= 1");
  }
  TraceSet t;
  t.length = spec.horizon;
  t.per_vm.resize(static_cast<size_t>(vm_count));
  for (int v = 0; v < vm_count; ++v) {
    auto rng = SplitMix64::substream(spec.seed, stream_tag::kTrace,
                                     static_cast<std::uint64_t>(v));
    auto& row = t.per_vm[static_cast<size_t>(v)];
    row.resize(static_cast<size_t>(spec.horizon));
    for (int i = 0; i < spec.horizon; ++i) {
      row[static_cast<size_t>(i)] = rng.next_in(spec.lo, spec.hi);
    }
  }
  return t;
}

namespace {

// Standard normal via Box-Muller; two uniform draws per sample keeps the
// stream consumption deterministic.
double next_normal(SplitMix64& rng) {
  double u1 = rng.next_unit();
  double u2 = rng.next_unit();
  u1 = std::max(u1, 0x1.0p-53);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

TraceSet generate_planetlab_like(std::uint64_t seed, int vm_count, int horizon,
                                 double lo, double hi, double phi) {
  if (vm_count < 1) throw std::invalid_argument("vm_count must be >= 1");
  TraceSet t;
  t.length = horizon;
  t.per_vm.resize(static_cast<size_t>(vm_count));
  const double noise = std::sqrt(1.0 - phi * phi);
  for (int v = 0; v < vm_count; ++v) {
    auto rng = SplitMix64::substream(seed, stream_tag::kTrace,
                                     static_cast<std::uint64_t>(v));
    auto& row = t.per_vm[static_cast<size_t>(v)];
    row.resize(static_cast<size_t>(horizon));
    double z = next_normal(rng);  // stationary start
    for (int i = 0; i < horizon; ++i) {
      row[static_cast<size_t>(i)] = lo + (hi - lo) * normal_cdf(z);
      z = phi * z + noise * next_normal(rng);
    }
  }
  return t;
}

TraceSet load_planetlab(const std::filesystem::path& directory, int vm_count) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    throw ConfigError("trace directory not found: " + directory.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  if (static_cast<int>(files.size()) < vm_count) {
    throw ConfigError("trace directory " + directory.string() + " has " +
                      std::to_string(files.size()) + " files, need " +
                      std::to_string(vm_count));
  }

  constexpr int kSamples = 288;
  TraceSet t;
  t.length = kSamples;
  t.per_vm.reserve(static_cast<size_t>(vm_count));
  for (int v = 0; v < vm_count; ++v) {
    const fs::path& file = files[static_cast<size_t>(v)];
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open trace file: " + file.string());
    std::vector<double> row;
    row.reserve(kSamples);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line) && static_cast<int>(row.size()) < kSamples) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      size_t pos = 0;
      long value = 0;
      try {
        value = std::stol(line, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != line.size()) {
        throw ConfigError(file.string() + ":" + std::to_string(line_no) +
                          ": not an integer: \"" + line + "\"");
      }
      if (value < 0 || value > 100) {
        throw ConfigError(file.string() + ":" + std::to_string(line_no) +
                          ": value " + std::to_string(value) +
                          " outside 0-100");
      }
      row.push_back(static_cast<double>(value) / 100.0);
    }
    if (static_cast<int>(row.size()) < kSamples) {
      throw ConfigError(file.string() + ": only " +
                        std::to_string(row.size()) + " samples, need " +
                        std::to_string(kSamples));
    }
    t.per_vm.push_back(std::move(row));
  }
  return t;
}

double trace_value(const TraceSet& traces, int vm_index, int t) {
  if (vm_index < 0 || vm_index >= static_cast<int>(traces.per_vm.size())) {
    throw std::logic_error("trace vm index out of range: " +
                           std::to_string(vm_index));
  }
  if (t < 0 || t >= traces.length) {
    throw std::logic_error("trace interval out of range: " + std::to_string(t));
  }
  return traces.per_vm[static_cast<size_t>(vm_index)][static_cast<size_t>(t)];
}

double demand_at(const TraceSet& traces, int vm_index, const VmSpec& vm,
                 int t) {
  return vm.mips * trace_value(traces, vm_index, t);
}

}  // namespace vmcsim
