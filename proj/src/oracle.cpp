// Copyright 2026 The qdag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdag/oracle.hpp"

namespace qdag {

std::string_view query_category_name(QueryCategory c) {
  switch (c) {
    case QueryCategory::kAdjacency: return "adjacency";
    case QueryCategory::kValue: return "value";
    case QueryCategory::kWeight: return "weight";
    case QueryCategory::kVerification: return "verification";
  }
  return "unknown";
}

void QueryLedger::charge(QueryCategory category, std::uint64_t count) {
  if (count == 0) return;
  totals_.total += count;
  totals_.by_category[static_cast<std::size_t>(category)] += count;
  totals_.per_vertex[current_] += count;
}

std::uint64_t QueryLedger::vertex(Vertex v) const {
  auto it = totals_.per_vertex.find(v);
  return it == totals_.per_vertex.end() ? 0 : it->second;
}

void QueryLedger::merge(const QueryLedger& other) {
  totals_.total += other.totals_.total;
  for (std::size_t c = 0; c < kQueryCategoryCount; ++c) {
    totals_.by_category[c] += other.totals_.by_category[c];
  }
  for (const auto& [v, q] : other.totals_.per_vertex) totals_.per_vertex[v] += q;
}

namespace {

// splitmix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive(std::uint64_t parent, std::uint64_t id) {
  return mix(mix(parent) ^ (id * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_(derive(seed, stream_id)) {}

RandomStream::RandomStream(std::uint64_t key, std::uint64_t counter, int)
    : key_(key), counter_(counter) {}

std::uint64_t RandomStream::next_u64() {
  // Two rounds so that nearby keys and counters decorrelate.
  return mix(mix(key_ + 0x632be59bd9b4e019ULL * ++counter_) ^ key_);
}

std::uint64_t RandomStream::uniform(std::uint64_t bound) {
  // Lemire's nearly-divisionless rejection method.
  unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double RandomStream::unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RandomStream RandomStream::substream(std::uint64_t id) const {
  return RandomStream(derive(key_, id), 0, 0);
}

Source<Vertex> adjacency_source(const Dag& dag, Vertex v) {
  if (v < 1 || v > dag.n()) {
    throw Error(ErrorCode::kOutOfRange, "no vertex " + std::to_string(v));
  }
  auto succ = dag.successors(v);
  return Source<Vertex>(succ.size(), [succ](std::size_t p) { return succ[p - 1]; });
}

}  // namespace qdag
