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

#include "qvrf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qvrf/bench.hpp"
#include "qvrf/entropy.hpp"
#include "qvrf/errors.hpp"
#include "qvrf/remote_qrng.hpp"
#include "qvrf/vrf.hpp"

namespace qvrf {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for "invalid" verdicts so they share the failure exit path
// without an error prefix.
struct Rejected {};

struct SourceFlags {
  std::string entropy;
  bool system = false;

  void add_to(CLI::App& cmd) {
    auto* e = cmd.add_option("--entropy", entropy, "Raw entropy file, read from offset 0");
    auto* s = cmd.add_flag("--system", system, "Use the operating system RNG");
    e->excludes(s);
  }

  std::unique_ptr<EntropySource> open() const {
    if (system) return std::make_unique<SystemEntropySource>();
    if (entropy.empty()) throw UsageError("one of --entropy or --system is required");
    return FileEntropyReader::open(entropy);
  }
};

Bytes read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SourceUnavailable("cannot read " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_all(const fs::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw WriteFailed("cannot write " + path.string());
}

// --msg accepts hex or @path.
Bytes parse_message(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_all(arg.substr(1));
  auto bytes = from_hex(arg);
  if (!bytes) throw UsageError("--msg: expected hex or @file, got '" + arg + "'");
  return *bytes;
}

SecretKey load_secret(const fs::path& path) {
  const Bytes raw = read_all(path);
  auto seed = to_array<32>(raw);
  if (!seed) throw InvalidLength(32, raw.size());
  return SecretKey::from_seed(*seed);
}

// Hex from the command line that goes to a total verifier: bad hex is just
// an invalid input, not a usage error.
Bytes lenient_hex(const std::string& s) { return from_hex(s).value_or(Bytes{}); }

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {
    app_.name("qvrf");
    app_.description("ECVRF over Ed25519 with pluggable entropy sources");
    app_.require_subcommand(1);
    app_.failure_message(CLI::FailureMessage::help);

    add_keygen();
    add_prove();
    add_verify();
    add_sign();
    add_verify_sig();
    add_entropy_fetch();
    add_pool_status();
    add_bench();
    add_compare();
  }

  int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"qvrf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app_.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app_.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitUsage;
    }

    try {
      action_();
      return kExitOk;
    } catch (const Rejected&) {
      return kExitFailure;
    } catch (const UsageError& e) {
      err_ << "usage error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitFailure;
    }
  }

 private:
  void add_keygen() {
    auto* cmd = app_.add_subcommand("keygen", "Generate a key pair");
    keygen_source_.add_to(*cmd);
    cmd->add_option("--out", out_prefix_, "Writes <prefix>.sk and <prefix>.pk")->required();
    cmd->callback([this] {
      action_ = [this] {
        auto source = keygen_source_.open();
        const KeyPair kp = gen_keypair(*source);
        const fs::path sk = out_prefix_ + ".sk";
        write_all(sk, kp.secret.seed);
        fs::permissions(sk, fs::perms::owner_read | fs::perms::owner_write,
                        fs::perm_options::replace);
        write_all(out_prefix_ + ".pk", kp.public_key.encoding());
        out_ << to_hex(kp.public_key.encoding()) << '\n';
      };
    });
  }

  void add_prove() {
    auto* cmd = app_.add_subcommand("prove", "Evaluate the VRF and print beta and proof");
    prove_source_.add_to(*cmd);
    cmd->add_option("--sk", sk_path_, "32-byte secret seed file")->required();
    cmd->add_option("--msg", msg_, "Message as hex, or @file")->required();
    cmd->callback([this] {
      action_ = [this] {
        const Bytes msg = parse_message(msg_);
        const SecretKey sk = load_secret(sk_path_);
        auto source = prove_source_.open();
        const VrfResult r = vrf_prove(sk, msg, *source);
        out_ << "beta=" << to_hex(r.output.beta) << '\n'
             << "proof=" << to_hex(r.proof.encode()) << '\n';
      };
    });
  }

  void add_verify() {
    auto* cmd = app_.add_subcommand("verify", "Check a VRF output and proof");
    cmd->add_option("--pk", pk_path_, "32-byte public key file")->required();
    cmd->add_option("--msg", msg_, "Message as hex, or @file")->required();
    cmd->add_option("--beta", beta_hex_, "64 hex digits")->required();
    cmd->add_option("--proof", proof_hex_, "160 hex digits")->required();
    cmd->callback([this] {
      action_ = [this] {
        const Bytes msg = parse_message(msg_);
        const Bytes pk = read_all(pk_path_);
        const auto v = vrf_verify(pk, msg, lenient_hex(beta_hex_), lenient_hex(proof_hex_));
        report(v == VrfVerdict::valid);
      };
    });
  }

  void add_sign() {
    auto* cmd = app_.add_subcommand("sign", "Ed25519 signature");
    cmd->add_option("--sk", sk_path_, "32-byte secret seed file")->required();
    cmd->add_option("--msg", msg_, "Message as hex, or @file")->required();
    cmd->callback([this] {
      action_ = [this] {
        const Bytes msg = parse_message(msg_);
        out_ << to_hex(sign(load_secret(sk_path_), msg).to_bytes()) << '\n';
      };
    });
  }

  void add_verify_sig() {
    auto* cmd = app_.add_subcommand("verify-sig", "Check an Ed25519 signature");
    cmd->add_option("--pk", pk_path_, "32-byte public key file")->required();
    cmd->add_option("--msg", msg_, "Message as hex, or @file")->required();
    cmd->add_option("--sig", sig_hex_, "128 hex digits")->required();
    cmd->callback([this] {
      action_ = [this] {
        const Bytes msg = parse_message(msg_);
        const Bytes pk = read_all(pk_path_);
        report(verify_signature(pk, msg, lenient_hex(sig_hex_)));
      };
    });
  }

  void add_entropy_fetch() {
    auto* cmd = app_.add_subcommand("entropy-fetch", "Append remote QRNG bytes to a file");
    cmd->add_option("--url", url_, std::string("Endpoint; defaults to $") + kQrngUrlEnv);
    cmd->add_option("--bytes", fetch_bytes_, "Number of bytes")->required();
    cmd->add_option("--out", fetch_out_, "File to append to")->required();
    cmd->add_option("--batch", fetch_batch_, "Bytes per request")->capture_default_str();
    cmd->callback([this] { action_ = [this] { entropy_fetch(); }; });
  }

  void entropy_fetch() {
    if (fetch_bytes_ == 0) throw UsageError("--bytes must be positive");
    if (fetch_batch_ == 0) throw UsageError("--batch must be positive");
    std::string url = url_;
    if (url.empty()) {
      if (const char* env = std::getenv(kQrngUrlEnv)) url = env;
    }
    if (url.empty()) throw UsageError(std::string("--url not given and $") + kQrngUrlEnv + " unset");

    RemoteQrngClient client({.endpoint = url,
                             .batch_length = fetch_batch_,
                             .max_per_request = fetch_batch_});
    std::ofstream file(fetch_out_, std::ios::binary | std::ios::app);
    if (!file) throw WriteFailed("cannot open " + fetch_out_);

    std::uint64_t written = 0;
    try {
      while (written < fetch_bytes_) {
        const auto n = static_cast<std::size_t>(
            std::min<std::uint64_t>(fetch_batch_, fetch_bytes_ - written));
        const Bytes chunk = remote_fetch(client, n);
        file.write(reinterpret_cast<const char*>(chunk.data()),
                   static_cast<std::streamsize>(chunk.size()));
        file.flush();
        if (!file) throw WriteFailed("write to " + fetch_out_ + " failed");
        written += chunk.size();
      }
    } catch (const std::exception&) {
      if (written > 0) {
        err_ << "warning: " << written << " bytes already appended to " << fetch_out_
             << " were kept\n";
      }
      throw;
    }
    out_ << written << '\n';
  }

  void add_pool_status() {
    auto* cmd = app_.add_subcommand(
        "pool-status", "Describe an entropy file as the benchmark pool would see it");
    cmd->add_option("--entropy", status_path_, "Raw entropy file")->required();
    cmd->add_option("--block-size", status_block_, "Pool block size")->capture_default_str();
    cmd->callback([this] {
      action_ = [this] {
        if (status_block_ < 32) throw UsageError("--block-size must be >= 32");
        auto reader = FileEntropyReader::open(status_path_);
        const std::uint64_t length = reader->length();
        out_ << "path=" << status_path_ << '\n'
             << "bytes=" << length << '\n'
             << "block_size=" << status_block_ << '\n'
             << "blocks=" << (length + status_block_ - 1) / status_block_ << '\n'
             << "ops_budget=" << length / kEntropyPerOp << '\n';
        // Estimate over at most the first MiB.
        Bytes head(static_cast<std::size_t>(std::min<std::uint64_t>(length, 1 << 20)));
        reader->read_into(head);
        if (head.size() >= 256) {
          out_ << "min_entropy_bits_per_byte=" << min_entropy_estimate(head) << '\n';
        } else {
          out_ << "min_entropy_bits_per_byte=n/a\n";
        }
      };
    });
  }

  void add_bench() {
    auto* cmd = app_.add_subcommand("bench", "Run the keygen/prove/verify benchmark");
    cmd->add_option("--config", bench_config_path_, "JSON file with BenchConfig fields");
    auto* e = cmd->add_option("--entropy", bench_entropy_, "Entropy file (file-qrng source)");
    auto* s = cmd->add_flag("--system", bench_system_, "Use the system RNG");
    e->excludes(s);
    cmd->add_option("-n,--ops", bench_n_, "Measured operations");
    cmd->add_option("--interval", bench_interval_, "Resource sample interval (ops)");
    cmd->add_option("--warmup", bench_warmup_, "Warmup operations");
    cmd->add_option("--workers", bench_workers_, "Concurrent workers");
    cmd->add_option("--pool-mode", bench_pool_mode_, "unbuffered or pooled")
        ->check(CLI::IsMember({"unbuffered", "pooled"}));
    cmd->add_option("--block-size", bench_block_, "Pool block size");
    cmd->add_option("--message-bytes", bench_msg_bytes_, "Message length");
    cmd->add_option("--seed", bench_seed_, "Message PRNG seed");
    cmd->add_option("--out", bench_out_, "CSV prefix (default: qvrf-bench)");
    cmd->add_flag("--quiet", bench_quiet_, "No progress lines on stderr");
    cmd->callback([this] { action_ = [this] { bench(); }; });
  }

  void bench() {
    BenchConfig c;
    if (!bench_config_path_.empty()) {
      try {
        c = load_bench_config(bench_config_path_);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (bench_system_) {
      c.source = BenchSource::system_rand;
      c.entropy_path.reset();
    }
    if (!bench_entropy_.empty()) {
      c.source = BenchSource::file_qrng;
      c.entropy_path = bench_entropy_;
    }
    if (bench_n_) c.n_ops = *bench_n_;
    if (bench_interval_) c.sample_interval = *bench_interval_;
    if (bench_warmup_) c.warmup_ops = *bench_warmup_;
    if (bench_workers_) c.workers = *bench_workers_;
    if (!bench_pool_mode_.empty()) c.pool_mode = *parse_pool_mode(bench_pool_mode_);
    if (bench_block_) c.block_size = *bench_block_;
    if (bench_msg_bytes_) c.message_bytes = *bench_msg_bytes_;
    if (bench_seed_) c.message_seed = *bench_seed_;
    if (!bench_out_.empty()) c.output_path = bench_out_;
    if (!c.output_path) c.output_path = "qvrf-bench";
    c.log_progress = !bench_quiet_;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    const BenchResult r = run_benchmark(c, err_);
    if (!r.records.empty()) out_ << summarize(r).to_text();
    out_ << "status=" << to_string(r.status) << " records=" << r.records.size()
         << " samples=" << r.samples.size()
         << " entropy_bytes=" << r.entropy_bytes_consumed << '\n'
         << "csv=" << ops_csv_path(*c.output_path).string() << ','
         << res_csv_path(*c.output_path).string() << '\n';
    if (!r.ok()) {
      err_ << "error: " << r.error;
      if (r.failed_op) err_ << " at op " << *r.failed_op;
      err_ << '\n';
      throw Rejected{};
    }
  }

  void add_compare() {
    auto* cmd = app_.add_subcommand("compare", "Compare a QRNG run against a system-RNG run");
    cmd->add_option("--qrng", cmp_qrng_, "CSV prefix of the QRNG run")->required();
    cmd->add_option("--rand", cmp_rand_, "CSV prefix of the system-RNG run")->required();
    cmd->add_flag("--json", cmp_json_, "Print the machine-readable report");
    cmd->callback([this] {
      action_ = [this] {
        auto load = [](const std::string& prefix) {
          return summarize(read_ops_csv(ops_csv_path(prefix)),
                           read_res_csv(res_csv_path(prefix)));
        };
        const auto report = compare_sources(load(cmp_qrng_), load(cmp_rand_));
        out_ << (cmp_json_ ? report.to_json() + "\n" : report.to_text());
      };
    });
  }

  void report(bool valid) {
    out_ << (valid ? "valid" : "invalid") << '\n';
    if (!valid) throw Rejected{};
  }

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_;
  std::function<void()> action_;

  SourceFlags keygen_source_, prove_source_;
  std::string out_prefix_, sk_path_, pk_path_, msg_, beta_hex_, proof_hex_, sig_hex_;

  std::string url_, fetch_out_;
  std::uint64_t fetch_bytes_ = 0;
  std::size_t fetch_batch_ = 1024;

  std::string status_path_;
  std::size_t status_block_ = 4096;

  std::string bench_config_path_, bench_entropy_, bench_pool_mode_, bench_out_;
  bool bench_system_ = false, bench_quiet_ = false;
  std::optional<std::uint64_t> bench_n_, bench_interval_, bench_warmup_, bench_seed_;
  std::optional<unsigned> bench_workers_;
  std::optional<std::size_t> bench_block_, bench_msg_bytes_;

  std::string cmp_qrng_, cmp_rand_;
  bool cmp_json_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(args);
}

}  // namespace qvrf
