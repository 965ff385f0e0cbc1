// Copyright 2026 The qvrf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <thread>

#include "qvrf/entropy.hpp"
#include "qvrf/errors.hpp"
#include "test_util.hpp"

namespace qvrf {
namespace {

using testing::TempDir;
using testing::write_file;

struct PoolFixture : ::testing::Test {
  void make_file(std::size_t size, std::uint64_t seed = 7) {
    std::mt19937_64 rng(seed);
    data = testing::random_bytes(rng, size);
    path = dir.file("pool.bin");
    write_file(path, data);
  }
  std::unique_ptr<EntropyPool> make_pool(PoolOptions opts) {
    return std::make_unique<EntropyPool>(open_file_source(path), opts);
  }

  TempDir dir;
  Bytes data;
  std::filesystem::path path;
};

TEST_F(PoolFixture, RejectsTinyBlocks) {
  make_file(64);
  EXPECT_THROW(make_pool({.block_size = 31}), std::invalid_argument);
}

TEST_F(PoolFixture, DefaultLowWaterIsQuarterBlock) {
  make_file(64);
  auto pool = pool_wrap(open_file_source(path), 4096);
  EXPECT_EQ(pool->block_size(), 4096u);
  EXPECT_EQ(pool->low_water_mark(), 1024u);
  EXPECT_EQ(pool->kind(), SourceKind::pooled);
}

TEST_F(PoolFixture, FirstByteFetchesOneBlock) {
  make_file(3 * 4096);
  auto pool = make_pool({.block_size = 4096, .low_water_mark = 0});
  EXPECT_EQ(pool->refill_count(), 0u);
  EXPECT_EQ(pool->read_bytes(1), Bytes{data[0]});
  EXPECT_EQ(pool->refill_count(), 1u);
}

TEST_F(PoolFixture, CacheHitsPerformNoInnerReads) {
  make_file(3 * 4096);
  auto pool = make_pool({.block_size = 4096, .low_water_mark = 0});
  pool->read_bytes(1);
  std::size_t total = 0;
  std::mt19937_64 rng(1);
  while (total < 4095) {
    std::size_t n = std::min<std::size_t>(4095 - total, 1 + rng() % 200);
    pool->read_bytes(n);
    total += n;
    EXPECT_EQ(pool->refill_count(), 1u);
  }
  EXPECT_EQ(pool->cached(), 0u);
  pool->read_bytes(1);
  EXPECT_EQ(pool->refill_count(), 2u);
}

TEST_F(PoolFixture, DefaultPrefetchStaysWithinRefillBound) {
  make_file(4 * 4096);
  auto pool = pool_wrap(open_file_source(path), 4096);
  pool->read_bytes(1);
  pool->read_bytes(4095);
  // One extra block may have been prefetched in the background.
  EXPECT_LE(pool->refill_count(), 2u);
}

TEST_F(PoolFixture, TwoBlocksMatchRawFile) {
  make_file(2 * 4096 + 100);
  auto pool = make_pool({.block_size = 4096});
  Bytes got;
  std::mt19937_64 rng(2);
  while (got.size() < 2 * 4096) {
    std::size_t n = std::min<std::size_t>(2 * 4096 - got.size(), rng() % 300);
    Bytes b = pool->read_bytes(n);
    got.insert(got.end(), b.begin(), b.end());
  }
  EXPECT_TRUE(std::equal(got.begin(), got.end(), data.begin()));
}

TEST_F(PoolFixture, RandomPartitionsPreserveStreamAndRefillBound) {
  make_file(200'000, 11);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t block = 32 + rng() % 5000;
    auto pool = make_pool({.block_size = block});
    Bytes got;
    while (got.size() < data.size()) {
      std::size_t n =
          std::min<std::size_t>(data.size() - got.size(), rng() % 3000);
      Bytes b = pool->read_bytes(n);
      got.insert(got.end(), b.begin(), b.end());
    }
    EXPECT_EQ(got, data);
    EXPECT_EQ(pool->bytes_served(), data.size());
    const std::uint64_t bound = (data.size() + block - 1) / block + 1;
    EXPECT_LE(pool->refill_count(), bound) << "block=" << block;
  }
}

TEST_F(PoolFixture, ExhaustionFailsWithoutConsuming) {
  make_file(100);
  auto pool = make_pool({.block_size = 64});
  EXPECT_EQ(pool->read_bytes(90), Bytes(data.begin(), data.begin() + 90));
  try {
    pool->read_bytes(11);
    FAIL() << "expected EntropyExhausted";
  } catch (const EntropyExhausted& e) {
    EXPECT_EQ(e.remaining(), 10u);
  }
  EXPECT_EQ(pool->read_bytes(10), Bytes(data.begin() + 90, data.end()));
  EXPECT_THROW(pool->read_bytes(1), EntropyExhausted);
}

TEST_F(PoolFixture, ReadSomeDrainsTail) {
  make_file(100);
  auto pool = make_pool({.block_size = 64});
  Bytes buf(80);
  EXPECT_EQ(pool->read_some(buf), 80u);
  EXPECT_EQ(pool->read_some(buf), 20u);
  EXPECT_EQ(pool->read_some(buf), 0u);
}

TEST_F(PoolFixture, ConcurrentSeedsPartitionTheStream) {
  constexpr std::size_t kSeeds = 4000;
  make_file(kSeeds * 32, 21);
  for (int consumers : {2, 8, 32}) {
    auto pool = make_pool({.block_size = 4096});
    std::vector<std::vector<Bytes>> per_thread(consumers);
    std::vector<std::thread> threads;
    for (int t = 0; t < consumers; ++t) {
      threads.emplace_back([&, t] {
        for (;;) {
          try {
            auto s = read_seed(*pool);
            per_thread[t].emplace_back(s.begin(), s.end());
          } catch (const EntropyExhausted&) {
            return;
          }
        }
      });
    }
    for (auto& th : threads) th.join();

    std::vector<Bytes> got;
    for (auto& v : per_thread) got.insert(got.end(), v.begin(), v.end());
    std::vector<Bytes> expect;
    for (std::size_t i = 0; i < kSeeds; ++i) {
      expect.emplace_back(data.begin() + static_cast<long>(32 * i),
                          data.begin() + static_cast<long>(32 * (i + 1)));
    }
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(got, expect) << consumers << " consumers";
  }
}

TEST_F(PoolFixture, SynchronizedSourceSharesFileReader) {
  make_file(64 * 100, 31);
  SynchronizedSource shared(open_file_source(path));
  std::atomic<std::size_t> total{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (;;) {
        try {
          shared.read_bytes(64);
          total += 64;
        } catch (const EntropyExhausted&) {
          return;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(total.load(), data.size());
}

// An inner source that fails after a fixed number of bytes.
class FailingSource final : public EntropySource {
 public:
  explicit FailingSource(std::size_t good) : good_(good) {}
  void read_into(std::span<std::uint8_t> out) override {
    if (out.size() > good_) throw SourceUnavailable("boom");
    std::fill(out.begin(), out.end(), 0x5a);
    good_ -= out.size();
  }
  SourceKind kind() const override { return SourceKind::remote; }

 private:
  std::size_t good_;
};

TEST(EntropyPoolErrorTest, InnerFailureSurfacesToConsumer) {
  EntropyPool pool(std::make_unique<FailingSource>(64),
                   {.block_size = 64, .low_water_mark = 0});
  EXPECT_EQ(pool.read_bytes(64), Bytes(64, 0x5a));
  EXPECT_THROW(pool.read_bytes(1), SourceUnavailable);
}

}  // namespace
}  // namespace qvrf
