// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/harness/harness.hpp>
#include <zkoffload/snark/serialization.hpp>
#include <zkoffload/snark/witness.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

namespace zkoffload::harness
{
using algebra::Fq;
using algebra::Fr;
using algebra::G1Affine;
using algebra::G1Point;
using algebra::G2Point;

namespace
{
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const std::map<std::string, Fault>& fault_names()
{
    static const std::map<std::string, Fault> m{
        {"none", Fault::kNone},
        {"corrupt-sum", Fault::kCorruptSum},
        {"corrupt-path", Fault::kCorruptPath},
        {"corrupt-proof", Fault::kCorruptProof},
        {"decouple-hash", Fault::kDecoupleHash},
    };
    return m;
}

const std::map<std::string, Variant>& variant_names()
{
    static const std::map<std::string, Variant> m{
        {"verified", Variant::kVerified},
        {"unverified", Variant::kUnverified},
        {"onchain", Variant::kOnchain},
    };
    return m;
}
}  // namespace

std::string to_string(Fault f)
{
    for (const auto& [k, v] : fault_names())
    {
        if (v == f)
            return k;
    }
    return "unknown";
}

std::string to_string(Variant v)
{
    for (const auto& [k, x] : variant_names())
    {
        if (x == v)
            return k;
    }
    return "unknown";
}

Fault parse_fault(const std::string& s)
{
    const auto it = fault_names().find(s);
    if (it == fault_names().end())
        throw std::invalid_argument("unknown fault '" + s + "'");
    return it->second;
}

Variant parse_variant(const std::string& s)
{
    const auto it = variant_names().find(s);
    if (it == variant_names().end())
        throw std::invalid_argument("unknown variant '" + s + "'");
    return it->second;
}

std::string to_string(ProviderStatus s)
{
    switch (s)
    {
    case ProviderStatus::kAccepted:
        return "accepted";
    case ProviderStatus::kDiscarded:
        return "discarded";
    case ProviderStatus::kAborted:
        return "aborted";
    }
    return "unknown";
}

// --- keys -----------------------------------------------------------------------------------

KeyStore::KeyStore(std::shared_ptr<const tsp::MapRegistry> maps, std::filesystem::path dir, std::string setup_seed)
  : maps_{std::move(maps)}, dir_{std::move(dir)}, setup_seed_{std::move(setup_seed)}
{
}

std::filesystem::path KeyStore::pk_path(const std::filesystem::path& dir, uint64_t mapnumber, std::size_t tier)
{
    return dir / ("map" + std::to_string(mapnumber) + "_tier" + std::to_string(tier) + ".pk");
}

std::filesystem::path KeyStore::vk_path(const std::filesystem::path& dir, uint64_t mapnumber, std::size_t tier)
{
    return dir / ("map" + std::to_string(mapnumber) + "_tier" + std::to_string(tier) + ".vk");
}

const tsp::TspCircuit& KeyStore::circuit(uint64_t mapnumber, std::size_t tier)
{
    auto& slot = circuits_[{mapnumber, tier}];
    if (!slot)
        slot = std::make_unique<tsp::TspCircuit>(tsp::build_tsp_circuit(*maps_, mapnumber, tier));
    return *slot;
}

const snark::KeyPair& KeyStore::keys(uint64_t mapnumber, std::size_t tier)
{
    auto& slot = keys_[{mapnumber, tier}];
    if (slot)
        return *slot;
    const auto& c = circuit(mapnumber, tier);
    if (!dir_.empty())
    {
        const auto pk = pk_path(dir_, mapnumber, tier);
        const auto vk = vk_path(dir_, mapnumber, tier);
        if (std::filesystem::exists(pk) && std::filesystem::exists(vk))
        {
            auto kp = std::make_unique<snark::KeyPair>();
            kp->pk = snark::decode_proving_key(snark::read_file(pk));
            kp->vk = snark::decode_verifying_key(snark::read_file(vk));
            if (kp->pk.cs_digest != c.system().digest())
                throw std::runtime_error("stale proving key " + pk.string() + " for map " +
                                         std::to_string(mapnumber) + " tier " + std::to_string(tier));
            slot = std::move(kp);
            return *slot;
        }
    }
    const std::string seed = setup_seed_ + ":" + std::to_string(mapnumber) + ":" + std::to_string(tier);
    slot = std::make_unique<snark::KeyPair>(snark::setup(c.system(), seed));
    if (!dir_.empty())
    {
        std::filesystem::create_directories(dir_);
        snark::write_file(pk_path(dir_, mapnumber, tier), snark::encode_proving_key(slot->pk));
        snark::write_file(vk_path(dir_, mapnumber, tier), snark::encode_verifying_key(slot->vk));
    }
    return *slot;
}

Address ensure_verifier(Ledger& l, KeyStore& ks, Address deployer, uint64_t mapnumber, std::size_t tier)
{
    if (const auto v = l.verifier_for(mapnumber, tier))
        return *v;
    const Receipt r = l.deploy_verifier(deployer, mapnumber, tier, ks.keys(mapnumber, tier).vk);
    return r.result.at("address").get<Address>();
}

// --- provider -------------------------------------------------------------------------------

namespace
{
tsp::Tour apply_tour_fault(const tsp::TspMap& map, tsp::Tour t, Fault f)
{
    if (f == Fault::kCorruptSum)
    {
        t.sum += 1;
    }
    else if (f == Fault::kCorruptPath)
    {
        if (t.path.size() >= 2)
            t.path[1] = t.path[0];
        else
            t.path[0] = t.path[0] == 1 ? 2 : 1;
        if (map.contains(t.path[0]))
            t.sum = tsp::tour_length(map, t.path);
    }
    return t;
}

/// Replaces, perturbs or negates one proof point.
snark::Proof corrupt_proof(snark::Proof p, uint64_t trial)
{
    std::mt19937_64 rng{trial ^ 0x9e3779b97f4a7c15ULL};
    const int which = static_cast<int>(rng() % 3);
    const int how = static_cast<int>(rng() % 4);
    const Fq delta{rng() | 1};
    const Fr k{rng() | 1};
    switch (which)
    {
    case 0:
        if (how == 0)
            p.a.y += delta;
        else if (how == 1)
            p.a = (G1Point::generator() * k).to_affine();
        else if (how == 2)
            p.a = G1Affine::identity();
        else
            p.a = -p.a;
        break;
    case 1:
        if (how == 0)
            p.b.x.c1 += delta;
        else if (how == 1)
            p.b = (G2Point::generator() * k).to_affine();
        else if (how == 2)
            p.b = algebra::G2Affine::identity();
        else
            p.b = -p.b;
        break;
    default:
        if (how == 0)
            p.c.x += delta;
        else if (how == 1)
            p.c = (G1Point{p.c} + G1Point::generator() * k).to_affine();
        else if (how == 2)
            p.c = G1Affine::identity();
        else
            p.c = -p.c;
        break;
    }
    return p;
}

/// Another valid tour over the same cities.
tsp::Tour other_tour(const tsp::TspMap& map, const tsp::Tour& t, uint64_t trial)
{
    tsp::Tour o = t;
    const std::size_t k = o.path.size();
    if (k < 2)
        return o;
    std::mt19937_64 rng{trial};
    if (k == 2 || rng() % 2 == 0)
    {
        std::reverse(o.path.begin(), o.path.end());
    }
    else
    {
        const std::size_t i = rng() % k;
        std::size_t j = rng() % k;
        if (i == j)
            j = (j + 1) % k;
        std::swap(o.path[i], o.path[j]);
    }
    o.sum = tsp::tour_length(map, o.path);
    return o;
}

snark::FieldRng blinding_rng(const ProviderOptions& opt, Address broker, int attempt)
{
    if (opt.blinding_seed.empty())
        return snark::FieldRng::from_entropy();
    return snark::FieldRng::from_seed(opt.blinding_seed + ":" + std::to_string(broker) + ":" +
                                      std::to_string(opt.provider) + ":" + std::to_string(attempt));
}
}  // namespace

ProviderOutcome run_provider(Ledger& l, KeyStore& ks, Address broker, const ProviderOptions& opt)
{
    const ledger::TaskRequest task = l.get_task_request(broker, opt.provider);
    const tsp::TspMap& map = l.maps().get(task.mapnumber);
    const tsp::Tour honest = tsp::solve_heuristic(map, task.cities, opt.solver_seed);

    ProviderOutcome out;
    if (opt.variant != Variant::kVerified)
    {
        out.attempts = 1;
        out.tour = apply_tour_fault(map, honest, opt.fault);
        out.receipt = opt.variant == Variant::kUnverified
                          ? l.submit_solution_unverified(broker, opt.provider, out.tour.path, out.tour.sum)
                          : l.submit_solution_onchain_check(broker, opt.provider, out.tour.path, out.tour.sum);
        out.status = out.receipt->ok() ? ProviderStatus::kAccepted : ProviderStatus::kDiscarded;
        return out;
    }

    const auto& circuit = ks.circuit(task.mapnumber, task.tier);
    const auto& keys = ks.keys(task.mapnumber, task.tier);

    std::optional<constraint::Assignment> z;
    tsp::Tour tour;
    for (int attempt = 1; attempt <= 2 && !z; ++attempt)
    {
        out.attempts = attempt;
        const bool faulty = attempt == 1 || opt.fault_persists;
        tour = faulty ? apply_tour_fault(map, honest, opt.fault) : honest;
        const auto start = Clock::now();
        auto w = tsp::tsp_witness(circuit, tour, task.cities);
        out.witness_ms = elapsed_ms(start);
        if (snark::succeeded(w))
            z = std::move(std::get<constraint::Assignment>(w));
        else
            out.detail = std::get<snark::WitnessFailure>(w).message;
    }
    if (!z)
    {
        out.status = ProviderStatus::kAborted;
        out.tour = tour;
        return out;
    }

    auto rng = blinding_rng(opt, broker, out.attempts);
    const auto start = Clock::now();
    snark::Proof proof = snark::prove(keys.pk, circuit.system(), *z, rng);
    out.proof_ms = elapsed_ms(start);

    const auto padded_cities = tsp::pad_cities(task.cities, task.tier);
    tsp::HashDigest path_hash = tsp::hash_cities(tsp::pad_tour(tour, task.tier));
    const tsp::HashDigest cities_hash = tsp::hash_cities(padded_cities);

    if (opt.fault == Fault::kCorruptProof)
        proof = corrupt_proof(proof, opt.trial);
    if (opt.fault == Fault::kDecoupleHash)
    {
        // Submit a different valid tour alongside the proof for `tour`. Even trials send the
        // new tour's own hash (caught by verification), odd trials keep the proven hash
        // (caught by the contract's recomputation).
        const tsp::Tour other = other_tour(map, tour, opt.trial);
        if (opt.trial % 2 == 0)
            path_hash = tsp::hash_cities(tsp::pad_tour(other, task.tier));
        tour = other;
    }

    out.tour = tour;
    out.receipt = l.submit_solution(broker, opt.provider, tsp::pad_tour(tour, task.tier), tour.sum, path_hash,
                                    cities_hash, proof);
    out.status = out.receipt->ok() ? ProviderStatus::kAccepted : ProviderStatus::kDiscarded;
    if (!out.receipt->ok())
        out.detail = out.receipt->result.value("reason", "");
    return out;
}

// --- consumer -------------------------------------------------------------------------------

Address create_task(Ledger& l, const ConsumerOptions& opt)
{
    ledger::TaskRequest req;
    req.mapnumber = opt.mapnumber;
    req.tier = opt.tier == 0 ? tsp::tier_for(opt.cities.size()) : opt.tier;
    req.cities = opt.cities;
    req.verify_flag = opt.verify_flag;
    req.min_duration = opt.min_duration;
    req.info = opt.info;
    const Address broker = l.deploy_broker(opt.consumer).result.at("address").get<Address>();
    l.create_task_request(broker, opt.consumer, opt.stake, req);
    return broker;
}

ConsumerOutcome finish_task(Ledger& l, Address broker, Address consumer)
{
    const ledger::TaskView view = l.task(broker);
    const uint64_t due = view.created_at + view.task.min_duration;
    if (l.height() < due)
        l.advance_blocks(due - l.height());

    ConsumerOutcome out;
    out.broker = broker;
    out.end_receipt = l.end_task(broker, consumer);
    out.refunded = out.end_receipt.result.at("refund").get<bool>();
    if (!l.solutions(broker).empty())
    {
        out.solution = l.retrieve_solution(broker, consumer);
        try
        {
            out.revalidated =
                tsp::validate_tour(l.maps().get(view.task.mapnumber), view.task.cities, out.solution->tour());
        }
        catch (const tsp::TspError&)
        {
            out.revalidated = false;
        }
    }
    return out;
}

ConsumerOutcome run_consumer(Ledger& l, const ConsumerOptions& opt, const std::function<void(Address)>& providers)
{
    const Address broker = create_task(l, opt);
    if (providers)
        providers(broker);
    return finish_task(l, broker, opt.consumer);
}

// --- scenario -------------------------------------------------------------------------------

ScenarioConfig ScenarioConfig::from_json(const std::string& text, const std::filesystem::path& base_dir)
{
    auto resolve = [&](const std::string& p) -> std::filesystem::path {
        if (p.empty())
            return {};
        const std::filesystem::path path{p};
        return path.is_absolute() ? path : base_dir / path;
    };
    ScenarioConfig c;
    try
    {
        const auto j = nlohmann::json::parse(text);
        c.registry = resolve(j.at("registry").get<std::string>());
        c.gas_schedule = resolve(j.value("gas_schedule", ""));
        c.keys_dir = resolve(j.value("keys_dir", ""));
        c.setup_seed = j.value("setup_seed", c.setup_seed);
        c.blinding_seed = j.value("blinding_seed", c.blinding_seed);
        c.solver_seed = j.value("solver_seed", c.solver_seed);
        if (j.contains("sweeps"))
        {
            for (const auto& s : j.at("sweeps"))
            {
                SweepSpec spec;
                spec.mapnumber = s.at("mapnumber").get<uint64_t>();
                if (s.contains("sizes"))
                    spec.sizes = s.at("sizes").get<std::vector<std::size_t>>();
                else
                    for (std::size_t k = s.at("from").get<std::size_t>(); k <= s.at("to").get<std::size_t>(); ++k)
                        spec.sizes.push_back(k);
                c.sweeps.push_back(std::move(spec));
            }
        }
        if (j.contains("variants"))
        {
            c.variants.clear();
            for (const auto& v : j.at("variants"))
                c.variants.push_back(parse_variant(v.get<std::string>()));
        }
        if (j.contains("genesis"))
        {
            c.genesis.clear();
            for (const auto& [k, v] : j.at("genesis").items())
                c.genesis[std::stoull(k)] = v.get<uint64_t>();
        }
        c.consumer = j.value("consumer", c.consumer);
        c.provider = j.value("provider", c.provider);
        c.stake = j.value("stake", c.stake);
        c.min_duration = j.value("min_duration", c.min_duration);
        c.csv_out = resolve(j.value("csv_out", ""));
        c.log_out = resolve(j.value("log_out", ""));
        c.summary_out = resolve(j.value("summary_out", ""));
    }
    catch (const nlohmann::json::exception& e)
    {
        throw std::invalid_argument(std::string{"malformed scenario config: "} + e.what());
    }
    return c;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw std::invalid_argument("cannot open scenario config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str(), path.parent_path());
}

void ScenarioConfig::check() const
{
    if (!std::filesystem::exists(registry))
        throw std::invalid_argument("map registry not found: " + registry.string());
    if (!gas_schedule.empty() && !std::filesystem::exists(gas_schedule))
        throw std::invalid_argument("gas schedule not found: " + gas_schedule.string());
    std::shared_ptr<const tsp::MapRegistry> maps;
    try
    {
        maps = load_maps();
    }
    catch (const tsp::TspError& e)
    {
        throw std::invalid_argument(std::string{"bad map registry: "} + e.what());
    }
    for (const auto& s : sweeps)
    {
        if (!maps->contains(s.mapnumber))
            throw std::invalid_argument("sweep references unregistered map " + std::to_string(s.mapnumber));
        const std::size_t limit = std::min<std::size_t>(tsp::kTiers.back(), maps->get(s.mapnumber).n);
        for (const auto k : s.sizes)
        {
            if (k == 0 || k > limit)
                throw std::invalid_argument("instance size " + std::to_string(k) + " is outside 1.." +
                                            std::to_string(limit) + " for map " + std::to_string(s.mapnumber));
        }
    }
}

std::shared_ptr<const tsp::MapRegistry> ScenarioConfig::load_maps() const
{
    return std::make_shared<const tsp::MapRegistry>(tsp::MapRegistry::load(registry));
}

ledger::GasSchedule ScenarioConfig::load_gas() const
{
    return gas_schedule.empty() ? ledger::GasSchedule{} : ledger::GasSchedule::load(gas_schedule);
}

Ledger make_ledger(const ScenarioConfig& cfg, std::shared_ptr<const tsp::MapRegistry> maps)
{
    Ledger l{cfg.load_gas(), std::move(maps)};
    for (const auto& [a, v] : cfg.genesis)
        l.fund(a, v);
    return l;
}

// --- benchmark ------------------------------------------------------------------------------

std::vector<City> instance_cities(std::size_t size)
{
    std::vector<City> c(size);
    for (std::size_t i = 0; i < size; ++i)
        c[i] = i + 1;
    return c;
}

BenchmarkResult run_benchmark(const ScenarioConfig& cfg, Ledger& l, KeyStore& ks)
{
    cfg.check();
    BenchmarkResult res;
    const bool want_verified =
        std::find(cfg.variants.begin(), cfg.variants.end(), Variant::kVerified) != cfg.variants.end();

    for (const auto& sweep : cfg.sweeps)
    {
        const tsp::TspMap& map = l.maps().get(sweep.mapnumber);
        for (const auto size : sweep.sizes)
        {
            if (size > map.n)
                throw std::invalid_argument("instance size " + std::to_string(size) + " exceeds map " +
                                            std::to_string(sweep.mapnumber));
        }
        if (want_verified)
        {
            for (const auto size : sweep.sizes)
                ensure_verifier(l, ks, cfg.consumer, sweep.mapnumber, tsp::tier_for(size));
            // Warm-up proof, discarded.
            if (!sweep.sizes.empty())
            {
                const std::size_t size = sweep.sizes.front();
                const std::size_t tier = tsp::tier_for(size);
                const auto cities = instance_cities(size);
                const auto tour = tsp::solve_heuristic(map, cities, cfg.solver_seed);
                auto w = tsp::tsp_witness(ks.circuit(sweep.mapnumber, tier), tour, cities);
                if (snark::succeeded(w))
                {
                    auto rng = snark::FieldRng::from_seed("warm-up");
                    snark::prove(ks.keys(sweep.mapnumber, tier).pk, ks.circuit(sweep.mapnumber, tier).system(),
                                 std::get<constraint::Assignment>(w), rng);
                }
            }
        }

        for (const auto size : sweep.sizes)
        {
            for (const auto variant : cfg.variants)
            {
                ConsumerOptions co;
                co.consumer = cfg.consumer;
                co.mapnumber = sweep.mapnumber;
                co.cities = instance_cities(size);
                co.stake = cfg.stake;
                co.verify_flag = variant == Variant::kVerified;
                co.min_duration = cfg.min_duration;

                ProviderOptions po;
                po.provider = cfg.provider;
                po.variant = variant;
                po.solver_seed = cfg.solver_seed;
                po.blinding_seed = cfg.blinding_seed;

                ProviderOutcome prov;
                const ConsumerOutcome cons =
                    run_consumer(l, co, [&](Address broker) { prov = run_provider(l, ks, broker, po); });
                if (prov.status != ProviderStatus::kAccepted || !cons.revalidated)
                    throw std::runtime_error("benchmark run failed for size " + std::to_string(size) + " variant " +
                                             to_string(variant) + ": " + prov.detail);

                BenchmarkRow row;
                row.size = size;
                row.mapnumber = sweep.mapnumber;
                row.tier = tsp::tier_for(size);
                row.variant = variant;
                row.gas_used = prov.receipt->gas_used;
                if (variant == Variant::kVerified)
                {
                    row.witness_ms = prov.witness_ms;
                    row.proof_ms = prov.proof_ms;
                }
                res.rows.push_back(row);
            }
        }
    }

    res.crossovers = find_crossovers(res.rows);
    double total = 0;
    std::size_t n = 0;
    for (const auto& r : res.rows)
    {
        if (r.witness_ms && r.proof_ms && *r.witness_ms > 0)
        {
            total += *r.proof_ms / *r.witness_ms;
            ++n;
        }
    }
    if (n != 0)
        res.mean_proof_witness_ratio = total / static_cast<double>(n);
    return res;
}

std::vector<Crossover> find_crossovers(const std::vector<BenchmarkRow>& rows)
{
    std::map<uint64_t, std::map<std::size_t, std::pair<std::optional<uint64_t>, std::optional<uint64_t>>>> by_map;
    for (const auto& r : rows)
    {
        auto& cell = by_map[r.mapnumber][r.size];
        if (r.variant == Variant::kVerified)
            cell.first = r.gas_used;
        else if (r.variant == Variant::kOnchain)
            cell.second = r.gas_used;
    }
    std::vector<Crossover> out;
    for (const auto& [m, sizes] : by_map)
    {
        std::vector<std::pair<std::size_t, int64_t>> diff;  // onchain - verified
        for (const auto& [s, cell] : sizes)
        {
            if (cell.first && cell.second)
                diff.emplace_back(s, static_cast<int64_t>(*cell.second) - static_cast<int64_t>(*cell.first));
        }
        if (diff.empty())
            continue;
        Crossover c;
        c.mapnumber = m;
        for (const auto& [s, d] : diff)
        {
            if (d >= 0)
            {
                c.s_star = s;
                break;
            }
        }
        for (std::size_t i = diff.size(); i-- > 0;)
        {
            if (diff[i].second <= 0)
                break;
            c.s_star_star = diff[i].first;
        }
        out.push_back(c);
    }
    return out;
}

namespace
{
std::string fmt_ms(const std::optional<double>& v)
{
    if (!v)
        return "";
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(3);
    ss << *v;
    return ss.str();
}
}  // namespace

std::string to_csv(const std::vector<BenchmarkRow>& rows)
{
    std::ostringstream out;
    out << "size,mapnumber,tier,variant,gas_used,witness_ms,proof_ms\n";
    for (const auto& r : rows)
        out << r.size << ',' << r.mapnumber << ',' << r.tier << ',' << to_string(r.variant) << ',' << r.gas_used
            << ',' << fmt_ms(r.witness_ms) << ',' << fmt_ms(r.proof_ms) << '\n';
    return out.str();
}

std::string gas_csv(const std::vector<BenchmarkRow>& rows)
{
    std::ostringstream out;
    out << "size,mapnumber,tier,variant,gas_used\n";
    for (const auto& r : rows)
        out << r.size << ',' << r.mapnumber << ',' << r.tier << ',' << to_string(r.variant) << ',' << r.gas_used
            << '\n';
    return out.str();
}

std::string summary_json(const BenchmarkResult& r)
{
    nlohmann::ordered_json j;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : r.crossovers)
    {
        nlohmann::ordered_json e;
        e["mapnumber"] = c.mapnumber;
        e["s_star"] = c.s_star ? nlohmann::ordered_json(*c.s_star) : nlohmann::ordered_json(nullptr);
        e["s_star_star"] = c.s_star_star ? nlohmann::ordered_json(*c.s_star_star) : nlohmann::ordered_json(nullptr);
        cs.push_back(e);
    }
    j["crossovers"] = cs;
    j["rows"] = r.rows.size();
    j["mean_proof_witness_ratio"] =
        r.mean_proof_witness_ratio ? nlohmann::ordered_json(*r.mean_proof_witness_ratio) : nlohmann::ordered_json(nullptr);
    j["reference_ratio"] = 3.2;
    return j.dump(2);
}
}  // namespace zkoffload::harness
