// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/harness/harness.hpp>
#include <zkoffload/snark/serialization.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace zkoffload;
using harness::Address;

namespace
{
struct Common
{
    std::string config = "data/config/sweep.json";
    std::string state = "zkoffload-state.jsonl";
};

harness::ScenarioConfig load_config(const Common& c)
{
    auto cfg = harness::ScenarioConfig::load(c.config);
    cfg.check();
    return cfg;
}

ledger::Ledger open_ledger(const harness::ScenarioConfig& cfg, const std::string& state)
{
    auto maps = cfg.load_maps();
    if (!fs::exists(state))
        return harness::make_ledger(cfg, maps);
    std::ifstream in{state};
    return ledger::Ledger::replay(cfg.load_gas(), maps, in);
}

void save_ledger(const ledger::Ledger& l, const std::string& state)
{
    const fs::path tmp = state + ".tmp";
    {
        std::ofstream out{tmp};
        l.export_log(out);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, state);
}

std::vector<tsp::City> parse_cities(const std::string& s)
{
    std::vector<tsp::City> out;
    std::stringstream ss{s};
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (!item.empty())
            out.push_back(std::stoull(item));
    }
    return out;
}

/// No verified task may hold a tour that fails validate_tour.
bool stored_solutions_valid(const ledger::Ledger& l)
{
    for (const auto b : l.brokers())
    {
        const auto view = l.task(b);
        if (!view.task.verify_flag)
            continue;
        for (const auto& s : l.solutions(b))
        {
            try
            {
                if (!tsp::validate_tour(l.maps().get(view.task.mapnumber), view.task.cities, s.tour()))
                    return false;
            }
            catch (const tsp::TspError&)
            {
                return false;
            }
        }
    }
    return true;
}

void write_text(const fs::path& p, const std::string& text)
{
    if (p.has_parent_path())
        fs::create_directories(p.parent_path());
    std::ofstream out{p};
    out << text;
    if (!out)
        throw std::runtime_error("cannot write " + p.string());
}

int keys_setup(const Common& c, uint64_t map, std::size_t tier, const std::string& out_dir)
{
    const auto cfg = load_config(c);
    const fs::path dir = out_dir.empty() ? cfg.keys_dir : fs::path{out_dir};
    if (dir.empty())
        throw std::invalid_argument("no key directory: pass --out or set keys_dir in the config");
    auto maps = cfg.load_maps();
    harness::KeyStore ks{maps, dir, cfg.setup_seed};
    std::vector<uint64_t> ids = map ? std::vector<uint64_t>{map} : maps->mapnumbers();
    for (const auto m : ids)
    {
        for (const auto t : tsp::kTiers)
        {
            if (tier && t != tier)
                continue;
            if (t > tsp::tier_for(std::min<std::size_t>(maps->get(m).n, tsp::kTiers.back())))
                continue;
            const auto& kp = ks.keys(m, t);
            std::cout << "map " << m << " tier " << t << ": " << harness::KeyStore::pk_path(dir, m, t).string()
                      << " (" << kp.pk.num_variables() << " variables), "
                      << harness::KeyStore::vk_path(dir, m, t).string() << '\n';
        }
    }
    return 0;
}

int task_create(const Common& c, uint64_t map, const std::string& cities, std::size_t size, uint64_t stake,
                bool no_verify, uint64_t min_duration, Address consumer, const std::string& info)
{
    const auto cfg = load_config(c);
    auto l = open_ledger(cfg, c.state);
    harness::ConsumerOptions opt;
    opt.consumer = consumer;
    opt.mapnumber = map;
    opt.cities = cities.empty() ? harness::instance_cities(size) : parse_cities(cities);
    opt.stake = stake;
    opt.verify_flag = !no_verify;
    opt.min_duration = min_duration;
    opt.info = info;
    if (opt.verify_flag)
    {
        harness::KeyStore ks{cfg.load_maps(), cfg.keys_dir, cfg.setup_seed};
        harness::ensure_verifier(l, ks, consumer, map, tsp::tier_for(opt.cities.size()));
    }
    const Address broker = harness::create_task(l, opt);
    save_ledger(l, c.state);
    nlohmann::json j{{"broker", broker}, {"state", ledger::to_string(l.state(broker))}};
    std::cout << j.dump() << '\n';
    return 0;
}

int provider_run(const Common& c, Address broker, const harness::ProviderOptions& opt)
{
    const auto cfg = load_config(c);
    auto l = open_ledger(cfg, c.state);
    harness::KeyStore ks{cfg.load_maps(), cfg.keys_dir, cfg.setup_seed};
    const auto out = harness::run_provider(l, ks, broker, opt);
    save_ledger(l, c.state);
    nlohmann::json j{{"status", harness::to_string(out.status)}, {"attempts", out.attempts},
                     {"path", out.tour.path}, {"sum", out.tour.sum}, {"detail", out.detail}};
    if (out.receipt)
        j["receipt"] = out.receipt->to_json();
    std::cout << j.dump() << '\n';
    if (!stored_solutions_valid(l))
        return 1;
    if (opt.fault == harness::Fault::kNone)
        return out.status == harness::ProviderStatus::kAccepted ? 0 : 1;
    // A checked variant must never accept an invalid tour.
    if (opt.variant != harness::Variant::kUnverified && out.status == harness::ProviderStatus::kAccepted)
    {
        const auto view = l.task(broker);
        try
        {
            return tsp::validate_tour(l.maps().get(view.task.mapnumber), view.task.cities, out.tour) ? 0 : 1;
        }
        catch (const tsp::TspError&)
        {
            return 1;
        }
    }
    return 0;
}

int consumer_run(const Common& c, Address broker, Address consumer)
{
    const auto cfg = load_config(c);
    auto l = open_ledger(cfg, c.state);
    const auto out = harness::finish_task(l, broker, consumer);
    save_ledger(l, c.state);
    nlohmann::json j{{"broker", broker}, {"refunded", out.refunded}, {"revalidated", out.revalidated},
                     {"receipt", out.end_receipt.to_json()}};
    if (out.solution)
    {
        const auto t = out.solution->tour();
        j["solution"] = {{"provider", out.solution->provider}, {"path", t.path}, {"sum", t.sum}};
    }
    std::cout << j.dump() << '\n';
    if (out.solution && !out.revalidated)
        std::cerr << "retrieved solution failed re-validation\n";
    if (!stored_solutions_valid(l))
        return 1;
    return out.solution ? (out.revalidated ? 0 : 1) : (out.refunded ? 0 : 1);
}

int bench_sweep(const Common& c, const std::string& csv, const std::string& log, const std::string& summary)
{
    auto cfg = load_config(c);
    if (!csv.empty())
        cfg.csv_out = csv;
    if (!log.empty())
        cfg.log_out = log;
    if (!summary.empty())
        cfg.summary_out = summary;
    auto maps = cfg.load_maps();
    auto l = harness::make_ledger(cfg, maps);
    const uint64_t supply = l.total_supply();
    harness::KeyStore ks{maps, cfg.keys_dir, cfg.setup_seed};
    const auto res = harness::run_benchmark(cfg, l, ks);

    const std::string csv_text = harness::to_csv(res.rows);
    if (!cfg.csv_out.empty())
        write_text(cfg.csv_out, csv_text);
    else
        std::cout << csv_text;
    if (!cfg.log_out.empty())
    {
        std::ostringstream ss;
        l.export_log(ss);
        write_text(cfg.log_out, ss.str());
    }
    const std::string sum_text = harness::summary_json(res);
    if (!cfg.summary_out.empty())
        write_text(cfg.summary_out, sum_text + "\n");
    std::cerr << sum_text << '\n';
    return l.total_supply() == supply && stored_solutions_valid(l) ? 0 : 1;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zkoffload: verifiable offloading of TSP tasks through a simulated ledger"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--config", common.config, "Scenario config (JSON)");
    app.add_option("--state", common.state, "Ledger log (JSON lines) holding the persistent state");

    auto* keys = app.add_subcommand("keys", "Key management");
    keys->require_subcommand(1);
    auto* keys_setup_cmd = keys->add_subcommand("setup", "Run the trusted setup per map and tier");
    uint64_t ks_map = 0;
    std::size_t ks_tier = 0;
    std::string ks_out;
    keys_setup_cmd->add_option("--map", ks_map, "Only this mapnumber");
    keys_setup_cmd->add_option("--tier", ks_tier, "Only this tier");
    keys_setup_cmd->add_option("--out", ks_out, "Output directory (defaults to keys_dir)");

    auto* task = app.add_subcommand("task", "Consumer task operations");
    task->require_subcommand(1);
    auto* task_create_cmd = task->add_subcommand("create", "Deploy a broker and create a task request");
    uint64_t tc_map = 1;
    std::string tc_cities;
    std::size_t tc_size = 5;
    uint64_t tc_stake = 1000;
    bool tc_no_verify = false;
    uint64_t tc_min = 2;
    Address tc_consumer = 1;
    std::string tc_info;
    task_create_cmd->add_option("--map", tc_map, "Mapnumber");
    task_create_cmd->add_option("--cities", tc_cities, "Comma-separated city numbers");
    task_create_cmd->add_option("--size", tc_size, "Use cities 1..size when --cities is absent");
    task_create_cmd->add_option("--stake", tc_stake, "Stake escrowed by the consumer");
    task_create_cmd->add_flag("--no-verify", tc_no_verify, "Do not require proof verification");
    task_create_cmd->add_option("--min-duration", tc_min, "Blocks before the task may end");
    task_create_cmd->add_option("--consumer", tc_consumer, "Consumer address");
    task_create_cmd->add_option("--info", tc_info, "Opaque task info");

    auto* provider = app.add_subcommand("provider", "Service provider");
    provider->require_subcommand(1);
    auto* provider_run_cmd = provider->add_subcommand("run", "Solve, prove and submit for a task");
    Address pr_broker = 0;
    harness::ProviderOptions pr;
    std::string pr_mode = "verified";
    std::string pr_fault = "none";
    bool pr_entropy = false;
    provider_run_cmd->add_option("--broker", pr_broker, "Broker contract address")->required();
    provider_run_cmd->add_option("--provider", pr.provider, "Provider address");
    provider_run_cmd->add_option("--seed", pr.solver_seed, "Heuristic solver seed");
    provider_run_cmd->add_option("--mode", pr_mode, "verified | unverified | onchain");
    provider_run_cmd->add_option("--fault", pr_fault, "none | corrupt-sum | corrupt-path | corrupt-proof | decouple-hash");
    provider_run_cmd->add_flag("--fault-persists", pr.fault_persists, "Keep the fault on retry");
    provider_run_cmd->add_option("--trial", pr.trial, "Seed for randomized faults");
    provider_run_cmd->add_flag("--entropy", pr_entropy, "Blind proofs with OS entropy");

    auto* consumer = app.add_subcommand("consumer", "Service consumer");
    consumer->require_subcommand(1);
    auto* consumer_run_cmd = consumer->add_subcommand("run", "End a task, retrieve and re-validate the solution");
    Address cr_broker = 0;
    Address cr_consumer = 1;
    consumer_run_cmd->add_option("--broker", cr_broker, "Broker contract address")->required();
    consumer_run_cmd->add_option("--consumer", cr_consumer, "Consumer address");

    auto* bench = app.add_subcommand("bench", "Benchmarks");
    bench->require_subcommand(1);
    auto* bench_sweep_cmd = bench->add_subcommand("sweep", "Gas and timing sweep over instance sizes");
    std::string bs_csv, bs_log, bs_summary;
    bench_sweep_cmd->add_option("--csv", bs_csv, "CSV output path");
    bench_sweep_cmd->add_option("--log", bs_log, "Ledger log output path");
    bench_sweep_cmd->add_option("--summary", bs_summary, "Crossover summary output path");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*keys_setup_cmd)
            return keys_setup(common, ks_map, ks_tier, ks_out);
        if (*task_create_cmd)
            return task_create(common, tc_map, tc_cities, tc_size, tc_stake, tc_no_verify, tc_min, tc_consumer,
                               tc_info);
        if (*provider_run_cmd)
        {
            pr.variant = harness::parse_variant(pr_mode);
            pr.fault = harness::parse_fault(pr_fault);
            if (pr_entropy)
                pr.blinding_seed.clear();
            return provider_run(common, pr_broker, pr);
        }
        if (*consumer_run_cmd)
            return consumer_run(common, cr_broker, cr_consumer);
        if (*bench_sweep_cmd)
            return bench_sweep(common, bs_csv, bs_log, bs_summary);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
