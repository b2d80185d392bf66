// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/ledger/ledger.hpp>
#include <zkoffload/snark/groth16.hpp>
#include <zkoffload/tsp/circuit.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace zkoffload::harness
{
using ledger::Address;
using ledger::Ledger;
using ledger::Receipt;
using tsp::City;

enum class Fault
{
    kNone,
    kCorruptSum,
    kCorruptPath,
    kCorruptProof,
    kDecoupleHash,
};

enum class Variant
{
    kVerified,
    kUnverified,
    kOnchain,
};

std::string to_string(Fault f);
std::string to_string(Variant v);
/// Throws std::invalid_argument on an unknown name.
Fault parse_fault(const std::string& s);
Variant parse_variant(const std::string& s);

/// Circuits and key pairs per (mapnumber, tier), built on first use.
/// With a directory set, keys are read from <dir>/map<M>_tier<T>.{pk,vk} when present and
/// written there after setup.
class KeyStore
{
public:
    KeyStore(std::shared_ptr<const tsp::MapRegistry> maps, std::filesystem::path dir, std::string setup_seed);

    const tsp::TspCircuit& circuit(uint64_t mapnumber, std::size_t tier);
    const snark::KeyPair& keys(uint64_t mapnumber, std::size_t tier);

    static std::filesystem::path pk_path(const std::filesystem::path& dir, uint64_t mapnumber, std::size_t tier);
    static std::filesystem::path vk_path(const std::filesystem::path& dir, uint64_t mapnumber, std::size_t tier);

private:
    std::shared_ptr<const tsp::MapRegistry> maps_;
    std::filesystem::path dir_;
    std::string setup_seed_;
    std::map<std::pair<uint64_t, std::size_t>, std::unique_ptr<tsp::TspCircuit>> circuits_;
    std::map<std::pair<uint64_t, std::size_t>, std::unique_ptr<snark::KeyPair>> keys_;
};

/// Deploys the verifier for (mapnumber, tier) unless one is already on the ledger.
Address ensure_verifier(Ledger& l, KeyStore& ks, Address deployer, uint64_t mapnumber, std::size_t tier);

struct ProviderOptions
{
    Address provider = 2;
    Variant variant = Variant::kVerified;
    Fault fault = Fault::kNone;
    /// Whether the fault survives the retry after a failed witness computation.
    bool fault_persists = false;
    uint64_t solver_seed = 1;
    /// Empty selects OS entropy for proof blinding.
    std::string blinding_seed = "zkoffload-blinding";
    /// Drives the randomized choices of corrupt-proof and decouple-hash.
    uint64_t trial = 0;
};

enum class ProviderStatus
{
    kAccepted,
    kDiscarded,
    kAborted,
};

std::string to_string(ProviderStatus s);

struct ProviderOutcome
{
    ProviderStatus status = ProviderStatus::kAborted;
    std::optional<Receipt> receipt;
    int attempts = 0;
    std::optional<double> witness_ms;
    std::optional<double> proof_ms;
    tsp::Tour tour;  // the tour actually submitted
    std::string detail;
};

/// Fetches the task, solves it off-ledger, and submits according to the variant. In the
/// verified variant a failed witness computation is retried once (without the fault unless
/// it persists), and a second failure aborts without submitting.
/// Ledger errors propagate unchanged.
ProviderOutcome run_provider(Ledger& l, KeyStore& ks, Address broker, const ProviderOptions& opt);

struct ConsumerOptions
{
    Address consumer = 1;
    uint64_t mapnumber = 1;
    std::vector<City> cities;
    std::size_t tier = 0;  // 0 picks the smallest fitting tier
    uint64_t stake = 1000;
    bool verify_flag = true;
    uint64_t min_duration = 2;
    std::string info;
};

/// Deploys a broker and opens the task on it. Returns the broker address.
Address create_task(Ledger& l, const ConsumerOptions& opt);

struct ConsumerOutcome
{
    Address broker = 0;
    bool refunded = false;
    std::optional<ledger::Solution> solution;
    /// validate_tour on the retrieved solution; false when there is none.
    bool revalidated = false;
    Receipt end_receipt;
};

/// Advances time to the minimum duration, ends the task, and re-validates any stored solution.
ConsumerOutcome finish_task(Ledger& l, Address broker, Address consumer);

/// create_task, then `providers(broker)`, then finish_task.
ConsumerOutcome run_consumer(Ledger& l, const ConsumerOptions& opt,
    const std::function<void(Address)>& providers = {});

struct SweepSpec
{
    uint64_t mapnumber = 0;
    std::vector<std::size_t> sizes;
};

struct ScenarioConfig
{
    std::filesystem::path registry;
    std::filesystem::path gas_schedule;  // empty for the default schedule
    std::filesystem::path keys_dir;      // empty keeps keys in memory only
    std::string setup_seed = "zkoffload-setup";
    std::string blinding_seed = "zkoffload-blinding";
    uint64_t solver_seed = 7;
    std::vector<SweepSpec> sweeps;
    std::vector<Variant> variants{Variant::kVerified, Variant::kUnverified, Variant::kOnchain};
    std::map<Address, uint64_t> genesis{{1, 1'000'000'000}, {2, 0}};
    Address consumer = 1;
    Address provider = 2;
    uint64_t stake = 1000;
    uint64_t min_duration = 2;
    std::filesystem::path csv_out;
    std::filesystem::path log_out;
    std::filesystem::path summary_out;

    /// Relative paths resolve against base_dir. Throws std::invalid_argument on bad input.
    static ScenarioConfig from_json(const std::string& text, const std::filesystem::path& base_dir);
    static ScenarioConfig load(const std::filesystem::path& path);

    /// Throws std::invalid_argument if a referenced file is missing, a map is unregistered, or a size
    /// exceeds the largest tier or the map.
    void check() const;

    std::shared_ptr<const tsp::MapRegistry> load_maps() const;
    ledger::GasSchedule load_gas() const;
};

/// Ledger with the scenario's schedule, maps and genesis balances.
Ledger make_ledger(const ScenarioConfig& cfg, std::shared_ptr<const tsp::MapRegistry> maps);

struct BenchmarkRow
{
    std::size_t size = 0;
    uint64_t mapnumber = 0;
    std::size_t tier = 0;
    Variant variant = Variant::kVerified;
    uint64_t gas_used = 0;
    std::optional<double> witness_ms;  // verified variant only
    std::optional<double> proof_ms;
};

struct Crossover
{
    uint64_t mapnumber = 0;
    /// Smallest size at which onchain gas is no longer below verified gas.
    std::optional<std::size_t> s_star;
    /// Smallest size from which onchain gas exceeds verified gas for every larger size swept.
    std::optional<std::size_t> s_star_star;
};

struct BenchmarkResult
{
    std::vector<BenchmarkRow> rows;
    std::vector<Crossover> crossovers;
    /// Mean proof_ms / witness_ms over verified rows.
    std::optional<double> mean_proof_witness_ratio;
};

/// Runs every (size, variant) of every sweep through the full pipeline on `l`.
BenchmarkResult run_benchmark(const ScenarioConfig& cfg, Ledger& l, KeyStore& ks);

std::vector<Crossover> find_crossovers(const std::vector<BenchmarkRow>& rows);

/// size,mapnumber,tier,variant,gas_used,witness_ms,proof_ms
std::string to_csv(const std::vector<BenchmarkRow>& rows);
/// The CSV without the time columns.
std::string gas_csv(const std::vector<BenchmarkRow>& rows);
std::string summary_json(const BenchmarkResult& r);

/// First `size` cities of the map.
std::vector<City> instance_cities(std::size_t size);

}  // namespace zkoffload::harness
