#pragma once

#include "pgog/verify.hpp"

// Randomized but fully reproducible test instances: a reduced graph of
// p-groups, a compatible map onto a small p-group target, and a subgroup of
// bounded index chosen normal in the image.  Instance i of a corpus depends
// only on (seed, i).

namespace pgog {

struct CorpusParams {
  int max_vertices = 6;
  int max_group_order = 64;
  int max_target_order = 16;
  int max_index = 9;
  int retries = 40;
};

struct CorpusInstance {
  int index = 0;
  uint64_t seed = 0;
  OpenSubgroupSpec spec;
};

CorpusInstance generate_instance(int index, uint64_t corpus_seed,
                                 const CorpusParams& params = {});
std::vector<CorpusInstance> generate_corpus(int count, uint64_t seed,
                                            const CorpusParams& params = {});

struct InstanceVerdict {
  LimitationReport limitation;
  bool accounting_ok = false;
  bool two_sided_ok = false;
  bool partition_applicable = false;  // index == p and q normal in the image
  PartitionReport partition;

  bool ok() const {
    if (limitation.hard_failure() || !accounting_ok || !two_sided_ok) return false;
    if (partition_applicable &&
        (!partition.fibres_uniform || !partition.holds_bound || !partition.bound_covers_gamma))
      return false;
    return true;
  }
};

InstanceVerdict verify_instance(const OpenSubgroupSpec& spec);

}  // namespace pgog
