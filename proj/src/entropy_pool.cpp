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

#include <stdexcept>

#include "qvrf/entropy.hpp"
#include "qvrf/errors.hpp"

namespace qvrf {

EntropyPool::EntropyPool(std::unique_ptr<EntropySource> inner,
                         PoolOptions options)
    : inner_(std::move(inner)),
      block_size_(options.block_size),
      low_water_mark_(options.low_water_mark.value_or(options.block_size / 4)) {
  if (!inner_) throw std::invalid_argument("EntropyPool: null inner source");
  if (block_size_ < 32) {
    throw std::invalid_argument("EntropyPool: block_size must be >= 32");
  }
  cache_.reserve(2 * block_size_);
  if (low_water_mark_ > 0) prefetcher_ = std::thread([this] { prefetch_loop(); });
}

EntropyPool::~EntropyPool() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  cv_.notify_all();
  if (prefetcher_.joinable()) prefetcher_.join();
}

std::size_t EntropyPool::cached() const {
  std::lock_guard lock(mu_);
  return available_locked();
}

std::uint64_t EntropyPool::refill_count() const {
  std::lock_guard lock(mu_);
  return refills_;
}

std::uint64_t EntropyPool::bytes_served() const {
  std::lock_guard lock(mu_);
  return served_;
}

// Caller holds the lock with !refilling_ && !inner_done_. The lock is
// released around the inner read so consumers can keep draining the cache.
void EntropyPool::refill_locked(std::unique_lock<std::mutex>& lock) {
  refilling_ = true;
  lock.unlock();
  Bytes block(block_size_);
  std::size_t got = 0;
  std::exception_ptr error;
  try {
    got = inner_->read_some(block);
  } catch (...) {
    error = std::current_exception();
  }
  lock.lock();
  refilling_ = false;
  ++refills_;
  if (error) {
    inner_error_ = error;
    inner_done_ = true;
  } else {
    if (head_ > 0) {
      cache_.erase(cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(head_));
      head_ = 0;
    }
    cache_.insert(cache_.end(), block.begin(),
                  block.begin() + static_cast<std::ptrdiff_t>(got));
    if (got < block_size_) inner_done_ = true;
  }
  cv_.notify_all();
}

void EntropyPool::take_locked(std::span<std::uint8_t> out) {
  std::copy_n(cache_.begin() + static_cast<std::ptrdiff_t>(head_), out.size(),
              out.begin());
  head_ += out.size();
  served_ += out.size();
  if (low_water_mark_ > 0 && available_locked() < low_water_mark_) {
    cv_.notify_all();
  }
}

void EntropyPool::read_into(std::span<std::uint8_t> out) {
  std::unique_lock lock(mu_);
  primed_ = true;
  for (;;) {
    if (available_locked() >= out.size()) {
      take_locked(out);
      return;
    }
    if (refilling_) {
      cv_.wait(lock);
      continue;
    }
    if (inner_done_) {
      if (inner_error_) std::rethrow_exception(inner_error_);
      throw EntropyExhausted(out.size(), available_locked());
    }
    refill_locked(lock);
  }
}

std::size_t EntropyPool::read_some(std::span<std::uint8_t> out) {
  std::unique_lock lock(mu_);
  primed_ = true;
  for (;;) {
    if (available_locked() >= out.size() || (inner_done_ && !refilling_)) {
      if (available_locked() == 0 && inner_error_) {
        std::rethrow_exception(inner_error_);
      }
      const std::size_t n = std::min(out.size(), available_locked());
      take_locked(out.first(n));
      return n;
    }
    if (refilling_) {
      cv_.wait(lock);
      continue;
    }
    refill_locked(lock);
  }
}

void EntropyPool::prefetch_loop() {
  std::unique_lock lock(mu_);
  for (;;) {
    cv_.wait(lock, [this] {
      return stop_ || (primed_ && !refilling_ && !inner_done_ &&
                       available_locked() < low_water_mark_);
    });
    if (stop_) return;
    refill_locked(lock);
  }
}

std::unique_ptr<EntropyPool> pool_wrap(std::unique_ptr<EntropySource> inner,
                                       std::size_t block_size) {
  return std::make_unique<EntropyPool>(std::move(inner),
                                       PoolOptions{.block_size = block_size});
}

}  // namespace qvrf
