// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/ledger/gas.hpp>
#include <zkoffload/snark/groth16.hpp>
#include <zkoffload/tsp/circuit.hpp>

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zkoffload::ledger
{
using Address = uint64_t;
using algebra::Fr;
using Json = nlohmann::json;
using tsp::City;
using tsp::HashDigest;

/// A reverted call. The ledger is left exactly as it was.
class LedgerError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Replayed log diverged from the recorded receipts.
class ReplayError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class TaskState
{
    kReady,
    kRunning,
    kEnded,
};

std::string to_string(TaskState s);

struct TaskRequest
{
    uint64_t mapnumber = 0;
    std::size_t tier = 0;
    std::vector<City> cities;
    bool verify_flag = true;
    uint64_t min_duration = 0;
    std::string info;

    bool operator==(const TaskRequest&) const = default;
};

struct Solution
{
    Address provider = 0;
    std::vector<City> path;  // as submitted; padded in the verified variant
    uint64_t sum = 0;
    bool verified = false;
    uint64_t tx_id = 0;

    /// Path without trailing sentinels.
    tsp::Tour tour() const;
    bool operator==(const Solution&) const = default;
};

struct Receipt
{
    uint64_t tx_id = 0;
    uint64_t block = 0;
    Address caller = 0;
    std::string method;
    uint64_t gas_used = 0;
    std::string status;  // "ok" or "discarded"
    Json result;

    bool ok() const noexcept { return status == "ok"; }
    Json to_json() const;
    static Receipt from_json(const Json& j);
    bool operator==(const Receipt&) const = default;
};

struct TaskView
{
    Address broker = 0;
    Address consumer = 0;
    TaskState state = TaskState::kReady;
    TaskRequest task;
    HashDigest cities_hash;
    uint64_t stake = 0;
    uint64_t created_at = 0;
    std::size_t num_solutions = 0;
};

/// Serial, deterministic ledger hosting broker and verifier contracts.
///
/// Every call either completes and appends one log entry, or throws LedgerError and
/// leaves the state untouched. Each transaction is mined in its own block.
class Ledger
{
public:
    Ledger(GasSchedule schedule, std::shared_ptr<const tsp::MapRegistry> maps);

    /// Executes a transaction given in its log form {"method": ..., "caller": ..., ...}.
    /// Administrative entries (fund, advance_blocks) return no receipt.
    std::optional<Receipt> apply(const Json& tx);

    // Administrative: genesis funding and simulated time.
    void fund(Address to, uint64_t amount);
    void advance_blocks(uint64_t n);

    Receipt deploy_verifier(Address caller, uint64_t mapnumber, std::size_t tier, const snark::VerifyingKey& vk);
    Receipt deploy_broker(Address caller);

    Receipt create_task_request(Address broker, Address caller, uint64_t stake, const TaskRequest& req);
    TaskRequest get_task_request(Address broker, Address caller) const;

    Receipt submit_solution(Address broker, Address caller, std::span<const City> padded_path, uint64_t sum,
        const HashDigest& hash_of_path, const HashDigest& hash_of_cities, const snark::Proof& proof);
    Receipt submit_solution_unverified(Address broker, Address caller, std::span<const City> path, uint64_t sum);
    Receipt submit_solution_onchain_check(Address broker, Address caller, std::span<const City> path, uint64_t sum);

    /// Standalone call of a verifier contract. The verdict is in result["verdict"].
    Receipt verify_tx(Address caller, Address verifier, const snark::Proof& proof, const tsp::PublicInputs& input);

    Receipt end_task(Address broker, Address caller);
    Solution retrieve_solution(Address broker, Address caller) const;

    uint64_t height() const noexcept { return height_; }
    uint64_t balance(Address a) const;
    uint64_t escrowed() const;
    /// Balances plus escrow.
    uint64_t total_supply() const;

    const GasSchedule& schedule() const noexcept { return schedule_; }
    const tsp::MapRegistry& maps() const noexcept { return *maps_; }
    bool is_broker(Address a) const noexcept { return brokers_.count(a) != 0; }
    std::vector<Address> brokers() const;
    TaskState state(Address broker) const;
    TaskView task(Address broker) const;
    const std::vector<Solution>& solutions(Address broker) const;
    std::optional<Address> verifier_for(uint64_t mapnumber, std::size_t tier) const;
    const snark::VerifyingKey& verifier_key(Address verifier) const;

    /// Entries {"tx": ..., "receipt": ... | null}, in order.
    const std::vector<Json>& log() const noexcept { return log_; }
    void export_log(std::ostream& out) const;

    /// SHA-256 (hex) over a canonical encoding of balances, contracts and height.
    std::string state_digest() const;

    /// Re-executes a JSON-lines log, checking every receipt. Throws ReplayError on divergence.
    static Ledger replay(GasSchedule schedule, std::shared_ptr<const tsp::MapRegistry> maps, std::istream& log);

private:
    struct Broker
    {
        Address consumer = 0;
        TaskState state = TaskState::kReady;
        TaskRequest task;
        HashDigest cities_hash;
        uint64_t stake = 0;
        uint64_t created_at = 0;
        std::vector<Solution> solutions;
    };
    struct Verifier
    {
        uint64_t mapnumber = 0;
        std::size_t tier = 0;
        snark::VerifyingKey vk;
    };

    Receipt execute(const Json& tx);
    Receipt finish(const Json& tx, Address caller, uint64_t gas, std::string status, Json result);

    Broker& broker_ref(Address a);
    const Broker& broker_ref(Address a) const;
    bool verify_call(GasMeter& gas, const Verifier& v, const snark::Proof& proof, const tsp::PublicInputs& input) const;

    Receipt do_deploy_verifier(const Json& tx);
    Receipt do_deploy_broker(const Json& tx);
    Receipt do_create_task(const Json& tx);
    Receipt do_submit(const Json& tx);
    Receipt do_submit_unverified(const Json& tx);
    Receipt do_submit_onchain(const Json& tx);
    Receipt do_verify_tx(const Json& tx);
    Receipt do_end_task(const Json& tx);

    GasSchedule schedule_;
    std::shared_ptr<const tsp::MapRegistry> maps_;
    std::map<Address, uint64_t> balances_;
    std::map<Address, Broker> brokers_;
    std::map<Address, Verifier> verifiers_;
    std::map<std::pair<uint64_t, std::size_t>, Address> verifier_index_;
    uint64_t height_ = 0;
    uint64_t next_tx_ = 1;
    Address next_contract_ = 1000;
    std::vector<Json> log_;
};

/// Front for concurrent clients. Calls run one at a time in lock order, which is the log order.
/// Callables should return values, not references into the ledger.
class SharedLedger
{
public:
    explicit SharedLedger(Ledger l) : ledger_{std::move(l)} {}

    std::optional<Receipt> apply(const Json& tx)
    {
        std::lock_guard lock{mu_};
        return ledger_.apply(tx);
    }

    template <typename F>
    auto with(F&& f)
    {
        std::lock_guard lock{mu_};
        return std::forward<F>(f)(ledger_);
    }

    template <typename F>
    auto read(F&& f) const
    {
        std::lock_guard lock{mu_};
        return std::forward<F>(f)(std::as_const(ledger_));
    }

private:
    mutable std::mutex mu_;
    Ledger ledger_;
};

// Wire forms used in transaction payloads.
Json digest_to_json(const HashDigest& d);
HashDigest digest_from_json(const Json& j);

}  // namespace zkoffload::ledger
