// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/constraint/mimc.hpp>
#include <zkoffload/ledger/ledger.hpp>
#include <zkoffload/snark/serialization.hpp>

#include <openssl/sha.h>

#include <algorithm>
#include <istream>
#include <ostream>

namespace zkoffload::ledger
{
namespace
{
constexpr uint64_t kProofWords = 8;

std::string bytes_to_hex(std::span<const uint8_t> b)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (const auto v : b)
    {
        s.push_back(kDigits[v >> 4]);
        s.push_back(kDigits[v & 15]);
    }
    return s;
}

snark::Bytes hex_to_bytes(const std::string& s)
{
    if (s.size() % 2 != 0)
        throw LedgerError("odd-length hex payload");
    auto nibble = [](char c) -> uint8_t {
        if (c >= '0' && c <= '9')
            return static_cast<uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f')
            return static_cast<uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F')
            return static_cast<uint8_t>(c - 'A' + 10);
        throw LedgerError("bad hex digit");
    };
    snark::Bytes out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<uint8_t>(nibble(s[2 * i]) << 4 | nibble(s[2 * i + 1]));
    return out;
}

Json path_json(std::span<const City> p)
{
    return Json(std::vector<City>(p.begin(), p.end()));
}

std::vector<City> strip_sentinels(std::vector<City> p)
{
    while (!p.empty() && p.back() == tsp::kSentinel)
        p.pop_back();
    return p;
}

uint64_t hash_cost(const GasSchedule& s, std::size_t elements)
{
    return s.hash_round * constraint::mimc::kRounds * (elements + 1);
}

uint64_t verify_cost(const GasSchedule& s)
{
    return s.call_base + s.verify_base + 4 * s.pairing + tsp::kNumPublicInputs * s.public_input;
}

template <typename T>
T field(const Json& tx, const char* name)
{
    if (!tx.contains(name))
        throw LedgerError(std::string{"transaction is missing "} + name);
    try
    {
        return tx.at(name).get<T>();
    }
    catch (const nlohmann::json::exception&)
    {
        throw LedgerError(std::string{"transaction field "} + name + " has the wrong type");
    }
}

Json proof_json(const snark::Proof& p)
{
    return Json::parse(snark::proof_to_json(p));
}

const Json& member(const Json& tx, const char* name)
{
    if (!tx.contains(name))
        throw LedgerError(std::string{"transaction is missing "} + name);
    return tx.at(name);
}
}  // namespace

std::string to_string(TaskState s)
{
    switch (s)
    {
    case TaskState::kReady:
        return "ready";
    case TaskState::kRunning:
        return "running";
    case TaskState::kEnded:
        return "ended";
    }
    return "unknown";
}

Json digest_to_json(const HashDigest& d)
{
    return Json::array({d.limb0.to_hex(), d.limb1.to_hex()});
}

HashDigest digest_from_json(const Json& j)
{
    try
    {
        if (!j.is_array() || j.size() != 2)
            throw LedgerError("digest must be [limb0, limb1]");
        return {Fr::from_hex(j[0].get<std::string>()), Fr::from_hex(j[1].get<std::string>())};
    }
    catch (const LedgerError&)
    {
        throw;
    }
    catch (const std::exception& e)
    {
        throw LedgerError(std::string{"malformed digest: "} + e.what());
    }
}

tsp::Tour Solution::tour() const
{
    return {strip_sentinels(path), sum};
}

Json Receipt::to_json() const
{
    Json j;
    j["tx_id"] = tx_id;
    j["block"] = block;
    j["caller"] = caller;
    j["method"] = method;
    j["gas_used"] = gas_used;
    j["status"] = status;
    j["result"] = result;
    return j;
}

Receipt Receipt::from_json(const Json& j)
{
    Receipt r;
    r.tx_id = j.at("tx_id").get<uint64_t>();
    r.block = j.at("block").get<uint64_t>();
    r.caller = j.at("caller").get<Address>();
    r.method = j.at("method").get<std::string>();
    r.gas_used = j.at("gas_used").get<uint64_t>();
    r.status = j.at("status").get<std::string>();
    r.result = j.at("result");
    return r;
}

Ledger::Ledger(GasSchedule schedule, std::shared_ptr<const tsp::MapRegistry> maps)
  : schedule_{schedule}, maps_{std::move(maps)}
{
    if (!maps_)
        throw std::invalid_argument("ledger needs a map registry");
}

std::optional<Receipt> Ledger::apply(const Json& tx)
{
    if (!tx.is_object())
        throw LedgerError("transaction must be a JSON object");
    const auto method = field<std::string>(tx, "method");
    if (method == "fund")
    {
        const auto to = field<Address>(tx, "to");
        const auto amount = field<uint64_t>(tx, "amount");
        if (brokers_.count(to) || verifiers_.count(to))
            throw LedgerError("cannot fund a contract address");
        balances_[to] += amount;
        log_.push_back(Json{{"tx", tx}, {"receipt", nullptr}});
        return std::nullopt;
    }
    if (method == "advance_blocks")
    {
        height_ += field<uint64_t>(tx, "n");
        log_.push_back(Json{{"tx", tx}, {"receipt", nullptr}});
        return std::nullopt;
    }
    Receipt r = execute(tx);
    log_.push_back(Json{{"tx", tx}, {"receipt", r.to_json()}});
    return r;
}

Receipt Ledger::execute(const Json& tx)
{
    const auto method = field<std::string>(tx, "method");
    if (method == "deploy_verifier")
        return do_deploy_verifier(tx);
    if (method == "deploy_broker")
        return do_deploy_broker(tx);
    if (method == "create_task_request")
        return do_create_task(tx);
    if (method == "submit_solution")
        return do_submit(tx);
    if (method == "submit_solution_unverified")
        return do_submit_unverified(tx);
    if (method == "submit_solution_onchain_check")
        return do_submit_onchain(tx);
    if (method == "verify_tx")
        return do_verify_tx(tx);
    if (method == "end_task")
        return do_end_task(tx);
    throw LedgerError("unknown method " + method);
}

Receipt Ledger::finish(const Json& tx, Address caller, uint64_t gas, std::string status, Json result)
{
    ++height_;
    Receipt r;
    r.tx_id = next_tx_++;
    r.block = height_;
    r.caller = caller;
    r.method = tx.at("method").get<std::string>();
    r.gas_used = gas;
    r.status = std::move(status);
    r.result = std::move(result);
    return r;
}

Ledger::Broker& Ledger::broker_ref(Address a)
{
    const auto it = brokers_.find(a);
    if (it == brokers_.end())
        throw LedgerError("no broker contract at address " + std::to_string(a));
    return it->second;
}

const Ledger::Broker& Ledger::broker_ref(Address a) const
{
    const auto it = brokers_.find(a);
    if (it == brokers_.end())
        throw LedgerError("no broker contract at address " + std::to_string(a));
    return it->second;
}

bool Ledger::verify_call(GasMeter& gas, const Verifier& v, const snark::Proof& proof,
                         const tsp::PublicInputs& input) const
{
    gas.charge(verify_cost(gas.schedule()));
    return snark::verify(v.vk, input, proof);
}

// --- typed wrappers -------------------------------------------------------------------------

void Ledger::fund(Address to, uint64_t amount)
{
    apply(Json{{"method", "fund"}, {"to", to}, {"amount", amount}});
}

void Ledger::advance_blocks(uint64_t n)
{
    apply(Json{{"method", "advance_blocks"}, {"n", n}});
}

Receipt Ledger::deploy_verifier(Address caller, uint64_t mapnumber, std::size_t tier, const snark::VerifyingKey& vk)
{
    return *apply(Json{{"method", "deploy_verifier"}, {"caller", caller}, {"mapnumber", mapnumber}, {"tier", tier},
                       {"vk", bytes_to_hex(snark::encode_verifying_key(vk))}});
}

Receipt Ledger::deploy_broker(Address caller)
{
    return *apply(Json{{"method", "deploy_broker"}, {"caller", caller}});
}

Receipt Ledger::create_task_request(Address broker, Address caller, uint64_t stake, const TaskRequest& req)
{
    return *apply(Json{{"method", "create_task_request"},
                       {"broker", broker},
                       {"caller", caller},
                       {"stake", stake},
                       {"mapnumber", req.mapnumber},
                       {"tier", req.tier},
                       {"cities", path_json(req.cities)},
                       {"verify_flag", req.verify_flag},
                       {"min_duration", req.min_duration},
                       {"info", req.info}});
}

Receipt Ledger::submit_solution(Address broker, Address caller, std::span<const City> padded_path, uint64_t sum,
    const HashDigest& hash_of_path, const HashDigest& hash_of_cities, const snark::Proof& proof)
{
    return *apply(Json{{"method", "submit_solution"},
                       {"broker", broker},
                       {"caller", caller},
                       {"path", path_json(padded_path)},
                       {"sum", sum},
                       {"hash_of_path", digest_to_json(hash_of_path)},
                       {"hash_of_cities", digest_to_json(hash_of_cities)},
                       {"proof", proof_json(proof)}});
}

Receipt Ledger::submit_solution_unverified(Address broker, Address caller, std::span<const City> path, uint64_t sum)
{
    return *apply(Json{{"method", "submit_solution_unverified"}, {"broker", broker}, {"caller", caller},
                       {"path", path_json(path)}, {"sum", sum}});
}

Receipt Ledger::submit_solution_onchain_check(Address broker, Address caller, std::span<const City> path, uint64_t sum)
{
    return *apply(Json{{"method", "submit_solution_onchain_check"}, {"broker", broker}, {"caller", caller},
                       {"path", path_json(path)}, {"sum", sum}});
}

Receipt Ledger::verify_tx(Address caller, Address verifier, const snark::Proof& proof, const tsp::PublicInputs& input)
{
    Json in = Json::array();
    for (const auto& x : input)
        in.push_back(x.to_hex());
    return *apply(Json{{"method", "verify_tx"}, {"caller", caller}, {"verifier", verifier},
                       {"proof", proof_json(proof)}, {"input", in}});
}

Receipt Ledger::end_task(Address broker, Address caller)
{
    return *apply(Json{{"method", "end_task"}, {"broker", broker}, {"caller", caller}});
}

// --- contract logic -------------------------------------------------------------------------

Receipt Ledger::do_deploy_verifier(const Json& tx)
{
    const auto caller = field<Address>(tx, "caller");
    const auto mapnumber = field<uint64_t>(tx, "mapnumber");
    const auto tier = field<std::size_t>(tx, "tier");
    const auto bytes = hex_to_bytes(field<std::string>(tx, "vk"));
    if (!maps_->contains(mapnumber))
        throw LedgerError("map " + std::to_string(mapnumber) + " is not registered");
    if (!tsp::is_valid_tier(tier))
        throw LedgerError("invalid tier " + std::to_string(tier));
    if (verifier_index_.count({mapnumber, tier}))
        throw LedgerError("a verifier for this map and tier is already deployed");
    Verifier v{mapnumber, tier, {}};
    try
    {
        v.vk = snark::decode_verifying_key(bytes);
    }
    catch (const snark::DecodeError& e)
    {
        throw LedgerError(std::string{"malformed verifying key: "} + e.what());
    }
    if (v.vk.num_public() != tsp::kNumPublicInputs)
        throw LedgerError("verifying key has the wrong number of public inputs");

    GasMeter gas{schedule_};
    gas.charge(schedule_.tx_base + schedule_.calldata_word * (bytes.size() / 32) +
               schedule_.storage_write_word * (bytes.size() / 32));
    const Address addr = next_contract_++;
    verifiers_.emplace(addr, std::move(v));
    verifier_index_[{mapnumber, tier}] = addr;
    return finish(tx, caller, gas.used(), "ok", Json{{"address", addr}});
}

Receipt Ledger::do_deploy_broker(const Json& tx)
{
    const auto caller = field<Address>(tx, "caller");
    GasMeter gas{schedule_};
    gas.charge(schedule_.tx_base + schedule_.storage_write_word);
    const Address addr = next_contract_++;
    brokers_.emplace(addr, Broker{});
    return finish(tx, caller, gas.used(), "ok", Json{{"address", addr}});
}

Receipt Ledger::do_create_task(const Json& tx)
{
    const auto addr = field<Address>(tx, "broker");
    const auto caller = field<Address>(tx, "caller");
    const auto stake = field<uint64_t>(tx, "stake");
    TaskRequest req;
    req.mapnumber = field<uint64_t>(tx, "mapnumber");
    req.tier = field<std::size_t>(tx, "tier");
    req.cities = field<std::vector<City>>(tx, "cities");
    req.verify_flag = field<bool>(tx, "verify_flag");
    req.min_duration = field<uint64_t>(tx, "min_duration");
    req.info = field<std::string>(tx, "info");

    Broker& b = broker_ref(addr);
    if (b.state != TaskState::kReady)
        throw LedgerError("create_task_request: broker is " + to_string(b.state) + ", expected ready");
    if (balance(caller) < stake)
        throw LedgerError("create_task_request: insufficient balance");
    try
    {
        tsp::TaskSpec{req.mapnumber, req.cities, req.tier}.check(maps_->get(req.mapnumber));
    }
    catch (const tsp::TspError& e)
    {
        throw LedgerError(std::string{"create_task_request: "} + e.what());
    }
    if (req.verify_flag && !verifier_for(req.mapnumber, req.tier))
        throw LedgerError("create_task_request: no verifier deployed for this map and tier");

    const std::size_t k = req.cities.size();
    GasMeter gas{schedule_};
    gas.charge(schedule_.tx_base + schedule_.calldata_word * (k + 6));
    gas.charge(hash_cost(schedule_, req.tier));
    gas.charge(schedule_.storage_write_word * (k + 6));

    b.cities_hash = tsp::hash_cities(tsp::pad_cities(req.cities, req.tier));
    b.consumer = caller;
    b.task = std::move(req);
    b.stake = stake;
    b.created_at = height_ + 1;
    b.state = TaskState::kRunning;
    balances_[caller] -= stake;
    return finish(tx, caller, gas.used(), "ok", Json{{"state", "running"}});
}

TaskRequest Ledger::get_task_request(Address broker, Address) const
{
    const Broker& b = broker_ref(broker);
    if (b.state != TaskState::kRunning)
        throw LedgerError("get_task_request: broker is " + to_string(b.state) + ", expected running");
    return b.task;
}

Receipt Ledger::do_submit(const Json& tx)
{
    const auto addr = field<Address>(tx, "broker");
    const auto caller = field<Address>(tx, "caller");
    const auto path = field<std::vector<City>>(tx, "path");
    const auto sum = field<uint64_t>(tx, "sum");
    const HashDigest hash_of_path = digest_from_json(member(tx, "hash_of_path"));
    const HashDigest hash_of_cities = digest_from_json(member(tx, "hash_of_cities"));
    const Json& proof_field = member(tx, "proof");

    Broker& b = broker_ref(addr);
    if (b.state != TaskState::kRunning)
        throw LedgerError("submit_solution: broker is " + to_string(b.state) + ", expected running");
    if (!b.task.verify_flag)
        throw LedgerError("submit_solution: task does not request verification");
    const std::size_t tier = b.task.tier;
    if (path.size() != tier)
        throw LedgerError("submit_solution: path must have exactly " + std::to_string(tier) + " entries");
    const Address vaddr = *verifier_for(b.task.mapnumber, tier);
    const Verifier& v = verifiers_.at(vaddr);

    GasMeter gas{schedule_};
    gas.charge(schedule_.tx_base + schedule_.calldata_word * (tier + 5 + kProofWords));

    auto discard = [&](const std::string& reason) {
        return finish(tx, caller, gas.used(), "discarded", Json{{"accepted", false}, {"reason", reason}});
    };

    gas.charge(hash_cost(schedule_, tier));
    if (tsp::hash_cities(path) != hash_of_path)
        return discard("path hash mismatch");
    gas.charge(2 * schedule_.storage_read_word);
    if (hash_of_cities != b.cities_hash)
        return discard("cities hash mismatch");

    snark::Proof proof;
    try
    {
        proof = snark::proof_from_json(proof_field.dump());
    }
    catch (const snark::DecodeError&)
    {
        gas.charge(verify_cost(schedule_));
        return discard("verification failed");
    }
    const tsp::PublicInputs input{Fr{sum}, hash_of_path.limb0, hash_of_path.limb1, hash_of_cities.limb0,
                                  hash_of_cities.limb1, Fr::one()};
    if (!verify_call(gas, v, proof, input))
        return discard("verification failed");

    gas.charge(schedule_.storage_write_word * (tier + 1));
    Receipt r = finish(tx, caller, gas.used(), "ok", Json{{"accepted", true}});
    b.solutions.push_back({caller, path, sum, true, r.tx_id});
    return r;
}

Receipt Ledger::do_submit_unverified(const Json& tx)
{
    const auto addr = field<Address>(tx, "broker");
    const auto caller = field<Address>(tx, "caller");
    const auto path = field<std::vector<City>>(tx, "path");
    const auto sum = field<uint64_t>(tx, "sum");

    Broker& b = broker_ref(addr);
    if (b.state != TaskState::kRunning)
        throw LedgerError("submit_solution_unverified: broker is " + to_string(b.state) + ", expected running");
    if (b.task.verify_flag)
        throw LedgerError("submit_solution_unverified: task requires verification");
    if (path.size() > b.task.tier)
        throw LedgerError("submit_solution_unverified: path longer than the tier");

    GasMeter gas{schedule_};
    gas.charge(schedule_.tx_base + schedule_.calldata_word * (path.size() + 1));
    gas.charge(schedule_.storage_write_word * (path.size() + 1));
    Receipt r = finish(tx, caller, gas.used(), "ok", Json{{"accepted", true}});
    b.solutions.push_back({caller, path, sum, false, r.tx_id});
    return r;
}

Receipt Ledger::do_submit_onchain(const Json& tx)
{
    const auto addr = field<Address>(tx, "broker");
    const auto caller = field<Address>(tx, "caller");
    const auto path = field<std::vector<City>>(tx, "path");
    const auto sum = field<uint64_t>(tx, "sum");

    Broker& b = broker_ref(addr);
    if (b.state != TaskState::kRunning)
        throw LedgerError("submit_solution_onchain_check: broker is " + to_string(b.state) + ", expected running");
    if (path.size() > b.task.tier)
        throw LedgerError("submit_solution_onchain_check: path longer than the tier");

    const std::size_t s = path.size();
    GasMeter gas{schedule_};
    gas.charge(schedule_.tx_base + schedule_.calldata_word * (s + 1) + schedule_.call_base);
    gas.charge(schedule_.storage_read_word);
    // Each iteration loads the instance city and one distance, then does the bookkeeping.
    gas.charge(s * (2 * schedule_.storage_read_word + schedule_.onchain_steps_per_city * schedule_.arith_step));

    bool valid = false;
    try
    {
        valid = tsp::validate_tour(maps_->get(b.task.mapnumber), b.task.cities, tsp::Tour{path, sum});
    }
    catch (const tsp::TspError&)
    {
        valid = false;
    }
    if (!valid)
        return finish(tx, caller, gas.used(), "discarded", Json{{"accepted", false}, {"reason", "invalid tour"}});

    gas.charge(schedule_.storage_write_word * (s + 1));
    Receipt r = finish(tx, caller, gas.used(), "ok", Json{{"accepted", true}});
    b.solutions.push_back({caller, path, sum, true, r.tx_id});
    return r;
}

Receipt Ledger::do_verify_tx(const Json& tx)
{
    const auto caller = field<Address>(tx, "caller");
    const auto vaddr = field<Address>(tx, "verifier");
    const auto in = field<std::vector<std::string>>(tx, "input");
    const auto it = verifiers_.find(vaddr);
    if (it == verifiers_.end())
        throw LedgerError("no verifier contract at address " + std::to_string(vaddr));
    if (in.size() != tsp::kNumPublicInputs)
        throw LedgerError("verify_tx: expected " + std::to_string(tsp::kNumPublicInputs) + " inputs");
    tsp::PublicInputs input;
    for (std::size_t i = 0; i < in.size(); ++i)
    {
        try
        {
            input[i] = Fr::from_hex(in[i]);
        }
        catch (const std::exception&)
        {
            throw LedgerError("verify_tx: malformed input");
        }
    }

    GasMeter gas{schedule_};
    gas.charge(schedule_.tx_base + schedule_.calldata_word * (kProofWords + tsp::kNumPublicInputs));
    bool verdict = false;
    try
    {
        const snark::Proof proof = snark::proof_from_json(member(tx, "proof").dump());
        verdict = verify_call(gas, it->second, proof, input);
    }
    catch (const snark::DecodeError&)
    {
        gas.charge(verify_cost(schedule_));
    }
    return finish(tx, caller, gas.used(), "ok", Json{{"verdict", verdict}});
}

Receipt Ledger::do_end_task(const Json& tx)
{
    const auto addr = field<Address>(tx, "broker");
    const auto caller = field<Address>(tx, "caller");
    Broker& b = broker_ref(addr);
    if (b.state != TaskState::kRunning)
        throw LedgerError("end_task: broker is " + to_string(b.state) + ", expected running");
    if (caller != b.consumer)
        throw LedgerError("end_task: only the task creator may end the task");
    if (height_ < b.created_at + b.task.min_duration)
        throw LedgerError("end_task: minimum duration has not passed");

    GasMeter gas{schedule_};
    gas.charge(schedule_.tx_base + schedule_.storage_write_word + schedule_.transfer);
    const bool refund = b.solutions.empty();
    const Address payee = refund ? b.consumer : b.solutions.front().provider;
    const uint64_t amount = b.stake;
    b.state = TaskState::kEnded;
    b.stake = 0;
    balances_[payee] += amount;
    return finish(tx, caller, gas.used(), "ok", Json{{"paid_to", payee}, {"amount", amount}, {"refund", refund}});
}

Solution Ledger::retrieve_solution(Address broker, Address) const
{
    const Broker& b = broker_ref(broker);
    if (b.state != TaskState::kEnded)
        throw LedgerError("retrieve_solution: broker is " + to_string(b.state) + ", expected ended");
    if (b.solutions.empty())
        throw LedgerError("retrieve_solution: no solution stored");
    return b.solutions.front();
}

// --- reads ----------------------------------------------------------------------------------

uint64_t Ledger::balance(Address a) const
{
    const auto it = balances_.find(a);
    return it == balances_.end() ? 0 : it->second;
}

uint64_t Ledger::escrowed() const
{
    uint64_t total = 0;
    for (const auto& [a, b] : brokers_)
        total += b.stake;
    return total;
}

uint64_t Ledger::total_supply() const
{
    uint64_t total = escrowed();
    for (const auto& [a, v] : balances_)
        total += v;
    return total;
}

std::vector<Address> Ledger::brokers() const
{
    std::vector<Address> out;
    for (const auto& [a, b] : brokers_)
        out.push_back(a);
    return out;
}

TaskState Ledger::state(Address broker) const
{
    return broker_ref(broker).state;
}

TaskView Ledger::task(Address broker) const
{
    const Broker& b = broker_ref(broker);
    return {broker, b.consumer, b.state, b.task, b.cities_hash, b.stake, b.created_at, b.solutions.size()};
}

const std::vector<Solution>& Ledger::solutions(Address broker) const
{
    return broker_ref(broker).solutions;
}

std::optional<Address> Ledger::verifier_for(uint64_t mapnumber, std::size_t tier) const
{
    const auto it = verifier_index_.find({mapnumber, tier});
    if (it == verifier_index_.end())
        return std::nullopt;
    return it->second;
}

const snark::VerifyingKey& Ledger::verifier_key(Address verifier) const
{
    const auto it = verifiers_.find(verifier);
    if (it == verifiers_.end())
        throw LedgerError("no verifier contract at address " + std::to_string(verifier));
    return it->second.vk;
}

void Ledger::export_log(std::ostream& out) const
{
    for (const auto& e : log_)
        out << e.dump() << '\n';
}

std::string Ledger::state_digest() const
{
    Json j;
    j["height"] = height_;
    j["next_tx"] = next_tx_;
    j["next_contract"] = next_contract_;
    Json bal = Json::array();
    for (const auto& [a, v] : balances_)
        bal.push_back({a, v});
    j["balances"] = bal;
    Json vs = Json::array();
    for (const auto& [a, v] : verifiers_)
        vs.push_back({a, v.mapnumber, v.tier, bytes_to_hex(snark::encode_verifying_key(v.vk))});
    j["verifiers"] = vs;
    Json bs = Json::array();
    for (const auto& [a, b] : brokers_)
    {
        Json sols = Json::array();
        for (const auto& s : b.solutions)
            sols.push_back({s.provider, s.path, s.sum, s.verified, s.tx_id});
        bs.push_back({a, b.consumer, to_string(b.state), b.task.mapnumber, b.task.tier, b.task.cities,
                      b.task.verify_flag, b.task.min_duration, b.task.info, digest_to_json(b.cities_hash), b.stake,
                      b.created_at, sols});
    }
    j["brokers"] = bs;
    const std::string text = j.dump();
    uint8_t out[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const uint8_t*>(text.data()), text.size(), out);
    return bytes_to_hex(out);
}

Ledger Ledger::replay(GasSchedule schedule, std::shared_ptr<const tsp::MapRegistry> maps, std::istream& log)
{
    Ledger l{schedule, std::move(maps)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(log, line))
    {
        ++lineno;
        if (line.empty())
            continue;
        Json entry;
        try
        {
            entry = Json::parse(line);
        }
        catch (const nlohmann::json::exception& e)
        {
            throw ReplayError("log line " + std::to_string(lineno) + " is not JSON: " + e.what());
        }
        std::optional<Receipt> r;
        try
        {
            r = l.apply(entry.at("tx"));
        }
        catch (const LedgerError& e)
        {
            throw ReplayError("log line " + std::to_string(lineno) + " reverted on replay: " + e.what());
        }
        const Json& recorded = entry.at("receipt");
        const Json got = r ? r->to_json() : Json(nullptr);
        if (got != recorded)
            throw ReplayError("log line " + std::to_string(lineno) + " produced a different receipt");
    }
    return l;
}
}  // namespace zkoffload::ledger
