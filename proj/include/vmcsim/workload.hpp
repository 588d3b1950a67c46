#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "vmcsim/domain.hpp"

namespace vmcsim {

// Per-VM CPU utilization fractions, one sample per interval. Row i drives
// config.vms[i]. Immutable after construction.
struct TraceSet {
  std::vector<std::vector<double>> per_vm;
  double interval_s = 300;
  int length = 0;

  // FNV-1a over the sample bit patterns; identifies the workload in CSV rows.
  std::uint64_t checksum() const;
};

struct SyntheticSpec {
  std::uint64_t seed = 0;
  double lo = 0.0;
  double hi = 1.0;
  int horizon = 288;
};

// i.i.d. uniform [lo, hi] samples from a per-VM SplitMix64 substream keyed by
// (seed, vm index); adding VMs never perturbs existing VMs' traces.
TraceSet generate_synthetic(const SyntheticSpec& spec, int vm_count);

// Stand-in for real PlanetLab traces: uniform(lo, hi) marginals with AR(1)
// persistence (Gaussian copula), since real 5-minute CPU samples are strongly
// autocorrelated. Same substream discipline as generate_synthetic.
TraceSet generate_planetlab_like(std::uint64_t seed, int vm_count, int horizon,
                                 double lo = 0.0, double hi = 0.4,
                                 double phi = 0.85);

// Reads the first vm_count files of `directory` in lexicographic filename
// order; each file is one integer 0-100 per line, 288 lines (CoMon dump
// layout). Errors carry file and line number.
TraceSet load_planetlab(const std::filesystem::path& directory, int vm_count);

// Utilization fraction of the VM at row vm_index, interval t (bounds-checked).
double trace_value(const TraceSet& traces, int vm_index, int t);

// Requested MIPS of `vm` (whose trace is row vm_index) at interval t.
double demand_at(const TraceSet& traces, int vm_index, const VmSpec& vm, int t);

}  // namespace vmcsim
