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

#include "qvrf/entropy.hpp"

#include <gtest/gtest.h>

#include "qvrf/errors.hpp"
#include "test_util.hpp"

namespace qvrf {
namespace {

using testing::TempDir;
using testing::write_file;

TEST(FileEntropyReaderTest, OpensAtOffsetZero) {
  TempDir dir;
  write_file(dir.file("e.bin"), Bytes(1024, 0xaa));
  auto r = open_file_source(dir.file("e.bin"));
  EXPECT_EQ(r->offset(), 0u);
  EXPECT_EQ(r->length(), 1024u);
  EXPECT_EQ(r->kind(), SourceKind::file);
}

TEST(FileEntropyReaderTest, EmptyFileFailsFirstRead) {
  TempDir dir;
  write_file(dir.file("empty.bin"), {});
  auto r = open_file_source(dir.file("empty.bin"));
  EXPECT_EQ(r->length(), 0u);
  EXPECT_THROW(r->read_bytes(1), EntropyExhausted);
  EXPECT_EQ(r->read_bytes(0).size(), 0u);
}

TEST(FileEntropyReaderTest, MissingFileIsUnavailable) {
  TempDir dir;
  EXPECT_THROW(open_file_source(dir.file("nope.bin")), SourceUnavailable);
  EXPECT_THROW(open_file_source(dir.path()), SourceUnavailable);
}

TEST(FileEntropyReaderTest, ReadsExactBytes) {
  TempDir dir;
  write_file(dir.file("e.bin"), Bytes{1, 2, 3, 4});
  auto r = open_file_source(dir.file("e.bin"));
  EXPECT_TRUE(r->read_bytes(0).empty());
  EXPECT_EQ(r->read_bytes(4), (Bytes{1, 2, 3, 4}));
  EXPECT_EQ(r->offset(), 4u);
}

TEST(FileEntropyReaderTest, ExhaustionReportsRemainingAndKeepsOffset) {
  TempDir dir;
  write_file(dir.file("e.bin"), Bytes{1, 2, 3, 4});
  auto r = open_file_source(dir.file("e.bin"));
  EXPECT_EQ(r->read_bytes(3), (Bytes{1, 2, 3}));
  try {
    r->read_bytes(2);
    FAIL() << "expected EntropyExhausted";
  } catch (const EntropyExhausted& e) {
    EXPECT_EQ(e.remaining(), 1u);
    EXPECT_EQ(e.requested(), 2u);
  }
  EXPECT_EQ(r->offset(), 3u);
  EXPECT_EQ(r->read_bytes(1), (Bytes{4}));
  EXPECT_THROW(r->read_bytes(1), EntropyExhausted);
  EXPECT_EQ(r->offset(), 4u);
}

TEST(FileEntropyReaderTest, ReadSomeIsShortOnlyAtEnd) {
  TempDir dir;
  write_file(dir.file("e.bin"), Bytes(10, 7));
  auto r = open_file_source(dir.file("e.bin"));
  Bytes buf(8);
  EXPECT_EQ(r->read_some(buf), 8u);
  EXPECT_EQ(r->read_some(buf), 2u);
  EXPECT_EQ(r->read_some(buf), 0u);
}

TEST(FileEntropyReaderTest, OffsetTracksSuccessfulReadsOnly) {
  TempDir dir;
  std::mt19937_64 rng(1);
  Bytes data = testing::random_bytes(rng, 5000);
  write_file(dir.file("e.bin"), data);
  auto r = open_file_source(dir.file("e.bin"));
  std::uint64_t consumed = 0;
  Bytes seen;
  for (int i = 0; i < 500; ++i) {
    std::size_t n = rng() % 97;
    try {
      Bytes b = r->read_bytes(n);
      consumed += n;
      seen.insert(seen.end(), b.begin(), b.end());
    } catch (const EntropyExhausted&) {
    }
    ASSERT_EQ(r->offset(), consumed);
  }
  EXPECT_EQ(seen, Bytes(data.begin(), data.begin() + static_cast<long>(seen.size())));
}

TEST(ReadSeedTest, ZeroFileGivesZeroSeed) {
  TempDir dir;
  write_file(dir.file("z.bin"), Bytes(32, 0));
  auto r = open_file_source(dir.file("z.bin"));
  EXPECT_EQ(read_seed(*r), ByteArray<32>{});
}

TEST(ReadSeedTest, ShortFileExhausts) {
  TempDir dir;
  write_file(dir.file("s.bin"), Bytes(31, 0));
  auto r = open_file_source(dir.file("s.bin"));
  EXPECT_THROW(read_seed(*r), EntropyExhausted);
}

TEST(ReadSeedTest, SuccessiveSeedsAreSuccessiveHalves) {
  TempDir dir;
  Bytes data(64);
  for (std::size_t i = 0; i < 64; ++i) data[i] = static_cast<std::uint8_t>(i);
  write_file(dir.file("h.bin"), data);
  auto r = open_file_source(dir.file("h.bin"));
  auto a = read_seed(*r);
  auto b = read_seed(*r);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), data.begin()));
  EXPECT_TRUE(std::equal(b.begin(), b.end(), data.begin() + 32));
}

TEST(SystemEntropySourceTest, FillsRequestedLength) {
  SystemEntropySource s;
  EXPECT_EQ(s.read_bytes(0).size(), 0u);
  Bytes a = s.read_bytes(64);
  Bytes b = s.read_bytes(64);
  EXPECT_EQ(a.size(), 64u);
  EXPECT_NE(a, b);
  EXPECT_EQ(s.kind(), SourceKind::system);
}

TEST(BufferEntropySourceTest, ConsumesInOrder) {
  BufferEntropySource s(Bytes{9, 8, 7});
  EXPECT_EQ(s.read_bytes(2), (Bytes{9, 8}));
  EXPECT_THROW(s.read_bytes(2), EntropyExhausted);
  EXPECT_EQ(s.read_bytes(1), (Bytes{7}));
}

TEST(MinEntropyTest, ConstantSampleIsZero) {
  EXPECT_DOUBLE_EQ(min_entropy_estimate(Bytes(256, 0)), 0.0);
}

TEST(MinEntropyTest, EachValueOnceIsEight) {
  Bytes s(256);
  for (int i = 0; i < 256; ++i) s[i] = static_cast<std::uint8_t>(i);
  EXPECT_DOUBLE_EQ(min_entropy_estimate(s), 8.0);
}

TEST(MinEntropyTest, MaxFrequencyEightOf512IsSix) {
  // Frequency oracle: value 0x42 appears 8 times, every other count <= 8.
  Bytes s;
  for (int i = 0; i < 8; ++i) s.push_back(0x42);
  std::mt19937_64 rng(3);
  std::array<int, 256> counts{};
  counts[0x42] = 8;
  while (s.size() < 512) {
    auto v = static_cast<std::uint8_t>(rng());
    if (counts[v] >= 8) continue;
    ++counts[v];
    s.push_back(v);
  }
  int max = 0;
  for (int c : counts) max = std::max(max, c);
  ASSERT_EQ(max, 8);
  EXPECT_DOUBLE_EQ(min_entropy_estimate(s), 6.0);
}

TEST(MinEntropyTest, ShortSampleRejected) {
  EXPECT_THROW(min_entropy_estimate(Bytes(255, 1)), InsufficientSample);
}

}  // namespace
}  // namespace qvrf
