// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/algebra/pairing.hpp>
#include <zkoffload/harness/harness.hpp>
#include <zkoffload/snark/rng.hpp>
#include <zkoffload/snark/serialization.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace zkoffload;
using algebra::Fq;
using algebra::Fr;

namespace
{
py::int_ to_py(const std::string& decimal)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(decimal.c_str(), nullptr, 10));
}

template <typename F>
py::int_ to_py(const F& x)
{
    return to_py(x.to_decimal());
}

template <typename F>
F from_py(const py::int_& x)
{
    static const py::int_ modulus = to_py(algebra::limbs::to_decimal(F::kModulus));
    const py::object reduced = x.attr("__mod__")(modulus);
    return F::from_decimal(py::str(reduced).cast<std::string>());
}

py::tuple digest(const tsp::HashDigest& d)
{
    return py::make_tuple(to_py(d.limb0), to_py(d.limb1));
}

py::object g1(const algebra::G1Affine& p)
{
    if (p.infinity)
        return py::none();
    return py::make_tuple(to_py(p.x), to_py(p.y));
}

py::object g2(const algebra::G2Affine& p)
{
    if (p.infinity)
        return py::none();
    return py::make_tuple(py::make_tuple(to_py(p.x.c0), to_py(p.x.c1)), py::make_tuple(to_py(p.y.c0), to_py(p.y.c1)));
}

// Coefficients over Fq in the basis 1, w, ..., w^11 with w^6 = 9 + u.
std::vector<py::int_> fq12_flat(const algebra::Fq12& f)
{
    const algebra::Fq2* by_power[6] = {&f.c0.c0, &f.c1.c0, &f.c0.c1, &f.c1.c1, &f.c0.c2, &f.c1.c2};
    const Fq nine{uint64_t{9}};
    std::vector<Fq> out(12);
    for (int k = 0; k < 6; ++k)
    {
        out[k] += by_power[k]->c0 - nine * by_power[k]->c1;
        out[k + 6] += by_power[k]->c1;
    }
    std::vector<py::int_> r;
    for (const auto& x : out)
        r.push_back(to_py(x));
    return r;
}

py::bytes as_bytes(const snark::Bytes& b)
{
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

snark::Bytes from_bytes(const py::bytes& b)
{
    const std::string s = b;
    return snark::Bytes(s.begin(), s.end());
}

py::dict solution_dict(const ledger::Solution& s)
{
    py::dict d;
    d["provider"] = s.provider;
    d["path"] = s.path;
    d["sum"] = s.sum;
    d["verified"] = s.verified;
    d["tx_id"] = s.tx_id;
    return d;
}

py::object receipt(const std::optional<ledger::Receipt>& r)
{
    if (!r)
        return py::none();
    return py::module_::import("json").attr("loads")(r->to_json().dump());
}
}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Native core of zkoffload";

    py::register_exception<tsp::TspError>(m, "TspError", PyExc_ValueError);
    py::register_exception<ledger::LedgerError>(m, "LedgerError", PyExc_RuntimeError);
    py::register_exception<ledger::ReplayError>(m, "ReplayError", PyExc_RuntimeError);
    py::register_exception<snark::DecodeError>(m, "DecodeError", PyExc_ValueError);

    // --- algebra ---
    m.def("fr_modulus", [] { return to_py(algebra::limbs::to_decimal(Fr::kModulus)); });
    m.def("fq_modulus", [] { return to_py(algebra::limbs::to_decimal(Fq::kModulus)); });
    m.def("fr_inverse", [](const py::int_& x) { return to_py(from_py<Fr>(x).inverse()); });
    m.def("g1_mul", [](const py::int_& k) {
        return g1((algebra::G1Point::generator() * from_py<Fr>(k)).to_affine());
    }, "k * G1 generator as (x, y), or None for the identity.");
    m.def("g2_mul", [](const py::int_& k) {
        return g2((algebra::G2Point::generator() * from_py<Fr>(k)).to_affine());
    }, "k * G2 generator as ((x0, x1), (y0, y1)), or None for the identity.");
    m.def("pairing", [](const py::int_& a, const py::int_& b) {
        const auto e = algebra::pairing(algebra::G1Point::generator() * from_py<Fr>(a),
                                        algebra::G2Point::generator() * from_py<Fr>(b));
        return fq12_flat(e.value());
    }, "e(a G1, b G2) as 12 Fq coefficients over w, with w^6 = 9 + u.");

    // --- hash ---
    m.def("hash_elements", [](const std::vector<py::int_>& xs) {
        std::vector<Fr> v;
        for (const auto& x : xs)
            v.push_back(from_py<Fr>(x));
        return digest(tsp::hash_elements(v));
    });
    m.def("hash_cities", [](const std::vector<tsp::City>& xs) { return digest(tsp::hash_cities(xs)); });

    // --- tsp ---
    m.attr("TIERS") = std::vector<std::size_t>(tsp::kTiers.begin(), tsp::kTiers.end());
    m.def("tier_for", &tsp::tier_for);
    m.def("pad_tour", [](const std::vector<tsp::City>& path, std::size_t tier) {
        return tsp::pad_tour({path, 0}, tier);
    });

    py::class_<tsp::TspMap>(m, "TspMap")
        .def_readonly("mapnumber", &tsp::TspMap::mapnumber)
        .def_readonly("n", &tsp::TspMap::n)
        .def_readonly("dist", &tsp::TspMap::dist)
        .def("distance", &tsp::TspMap::distance)
        .def("to_json", &tsp::TspMap::to_json)
        .def_static("from_json", &tsp::TspMap::from_json)
        .def_static("load", &tsp::TspMap::load)
        .def_static("synthetic", &tsp::generate_synthetic_map, py::arg("mapnumber"), py::arg("n"), py::arg("seed"));

    py::class_<tsp::MapRegistry, std::shared_ptr<tsp::MapRegistry>>(m, "MapRegistry")
        .def_static("load", [](const std::filesystem::path& p) {
            return std::make_shared<tsp::MapRegistry>(tsp::MapRegistry::load(p));
        })
        .def("get", &tsp::MapRegistry::get, py::return_value_policy::copy)
        .def("mapnumbers", &tsp::MapRegistry::mapnumbers)
        .def("__contains__", &tsp::MapRegistry::contains);

    m.def("tour_length", [](const tsp::TspMap& map, const std::vector<tsp::City>& path) {
        return tsp::tour_length(map, path);
    });
    m.def("validate_tour", [](const tsp::TspMap& map, const std::vector<tsp::City>& cities,
                              const std::vector<tsp::City>& path, uint64_t sum) {
        return tsp::validate_tour(map, cities, {path, sum});
    });
    m.def("solve_exact", [](const tsp::TspMap& map, const std::vector<tsp::City>& cities) {
        const auto t = tsp::solve_exact(map, cities);
        return py::make_tuple(t.path, t.sum);
    });
    m.def("solve_heuristic", [](const tsp::TspMap& map, const std::vector<tsp::City>& cities, uint64_t seed) {
        const auto t = tsp::solve_heuristic(map, cities, seed);
        return py::make_tuple(t.path, t.sum);
    }, py::arg("map"), py::arg("cities"), py::arg("seed") = 1);

    // --- snark ---
    py::class_<harness::KeyStore>(m, "KeyStore")
        .def(py::init([](std::shared_ptr<tsp::MapRegistry> maps, const std::filesystem::path& dir,
                         const std::string& seed) { return std::make_unique<harness::KeyStore>(maps, dir, seed); }),
             py::arg("maps"), py::arg("dir") = std::filesystem::path{}, py::arg("seed") = "zkoffload-setup")
        .def("num_constraints", [](harness::KeyStore& ks, uint64_t mapnumber, std::size_t tier) {
            return ks.circuit(mapnumber, tier).system().num_constraints();
        })
        .def("verifying_key", [](harness::KeyStore& ks, uint64_t mapnumber, std::size_t tier) {
            return as_bytes(snark::encode_verifying_key(ks.keys(mapnumber, tier).vk));
        });

    m.def("public_inputs", [](uint64_t sum, const std::vector<tsp::City>& path, const std::vector<tsp::City>& cities,
                              std::size_t tier) {
        const auto in = tsp::public_inputs(sum, tsp::pad_tour({path, sum}, tier), tsp::pad_cities(cities, tier));
        std::vector<py::int_> out;
        for (const auto& x : in)
            out.push_back(to_py(x));
        return out;
    });
    m.def("prove_tour", [](harness::KeyStore& ks, uint64_t mapnumber, std::size_t tier,
                           const std::vector<tsp::City>& path, uint64_t sum, const std::vector<tsp::City>& cities,
                           const std::string& seed) {
        const auto& c = ks.circuit(mapnumber, tier);
        const auto& keys = ks.keys(mapnumber, tier);
        snark::Proof proof;
        {
            py::gil_scoped_release release;
            auto w = tsp::tsp_witness(c, {path, sum}, cities);
            if (!snark::succeeded(w))
                throw tsp::TspError("no witness: " + std::get<snark::WitnessFailure>(w).message);
            auto rng = seed.empty() ? snark::FieldRng::from_entropy() : snark::FieldRng::from_seed(seed);
            proof = snark::prove(keys.pk, c.system(), std::get<constraint::Assignment>(w), rng);
        }
        return as_bytes(snark::encode_proof(proof));
    }, py::arg("keystore"), py::arg("mapnumber"), py::arg("tier"), py::arg("path"), py::arg("sum"),
       py::arg("cities"), py::arg("seed") = "zkoffload-blinding",
       "Witness and Groth16 proof for a tour. Raises TspError if the tour is not a valid solution.");
    m.def("verify_proof", [](const py::bytes& vk, const std::vector<py::int_>& inputs, const py::bytes& proof) {
        std::vector<Fr> in;
        for (const auto& x : inputs)
            in.push_back(from_py<Fr>(x));
        const auto key = snark::decode_verifying_key(from_bytes(vk));
        snark::Proof p;
        try
        {
            p = snark::decode_proof(from_bytes(proof));
        }
        catch (const snark::DecodeError&)
        {
            return false;
        }
        return snark::verify(key, in, p);
    });

    // --- ledger ---
    py::class_<ledger::Ledger>(m, "Ledger")
        .def(py::init([](std::shared_ptr<tsp::MapRegistry> maps, const std::string& gas_json) {
                 const auto gas = gas_json.empty() ? ledger::GasSchedule{} : ledger::GasSchedule::from_json(gas_json);
                 return ledger::Ledger{gas, maps};
             }),
             py::arg("maps"), py::arg("gas_json") = "")
        .def_static("replay", [](std::shared_ptr<tsp::MapRegistry> maps, const std::string& log,
                                 const std::string& gas_json) {
            std::istringstream in{log};
            const auto gas = gas_json.empty() ? ledger::GasSchedule{} : ledger::GasSchedule::from_json(gas_json);
            return ledger::Ledger::replay(gas, maps, in);
        }, py::arg("maps"), py::arg("log"), py::arg("gas_json") = "")
        .def("fund", &ledger::Ledger::fund)
        .def("advance_blocks", &ledger::Ledger::advance_blocks)
        .def("apply", [](ledger::Ledger& l, const std::string& tx) {
            return receipt(l.apply(ledger::Json::parse(tx)));
        }, "Execute one transaction in log form (a JSON string); returns the receipt or None.")
        .def("balance", &ledger::Ledger::balance)
        .def("total_supply", &ledger::Ledger::total_supply)
        .def("escrowed", &ledger::Ledger::escrowed)
        .def_property_readonly("height", &ledger::Ledger::height)
        .def("state", [](const ledger::Ledger& l, ledger::Address b) { return ledger::to_string(l.state(b)); })
        .def("brokers", &ledger::Ledger::brokers)
        .def("solutions", [](const ledger::Ledger& l, ledger::Address b) {
            py::list out;
            for (const auto& s : l.solutions(b))
                out.append(solution_dict(s));
            return out;
        })
        .def("state_digest", &ledger::Ledger::state_digest)
        .def("export_log", [](const ledger::Ledger& l) {
            std::ostringstream out;
            l.export_log(out);
            return out.str();
        });

    // --- harness ---
    m.def("ensure_verifier", [](ledger::Ledger& l, harness::KeyStore& ks, uint64_t mapnumber, std::size_t tier,
                                ledger::Address deployer) {
        return harness::ensure_verifier(l, ks, deployer, mapnumber, tier);
    }, py::arg("ledger"), py::arg("keystore"), py::arg("mapnumber"), py::arg("tier"), py::arg("deployer") = 1);
    m.def("create_task", [](ledger::Ledger& l, uint64_t mapnumber, const std::vector<tsp::City>& cities,
                            bool verify, uint64_t stake, uint64_t min_duration, ledger::Address consumer,
                            std::size_t tier) {
        harness::ConsumerOptions o;
        o.mapnumber = mapnumber;
        o.cities = cities;
        o.verify_flag = verify;
        o.stake = stake;
        o.min_duration = min_duration;
        o.consumer = consumer;
        o.tier = tier;
        return harness::create_task(l, o);
    }, py::arg("ledger"), py::arg("mapnumber"), py::arg("cities"), py::arg("verify") = true,
       py::arg("stake") = 1000, py::arg("min_duration") = 2, py::arg("consumer") = 1, py::arg("tier") = 0);
    m.def("run_provider", [](ledger::Ledger& l, harness::KeyStore& ks, ledger::Address broker, const std::string& variant,
                             const std::string& fault, bool fault_persists, uint64_t seed, uint64_t trial,
                             ledger::Address provider) {
        harness::ProviderOptions o;
        o.variant = harness::parse_variant(variant);
        o.fault = harness::parse_fault(fault);
        o.fault_persists = fault_persists;
        o.solver_seed = seed;
        o.trial = trial;
        o.provider = provider;
        const auto r = harness::run_provider(l, ks, broker, o);
        py::dict d;
        d["status"] = harness::to_string(r.status);
        d["attempts"] = r.attempts;
        d["path"] = r.tour.path;
        d["sum"] = r.tour.sum;
        d["witness_ms"] = r.witness_ms;
        d["proof_ms"] = r.proof_ms;
        d["detail"] = r.detail;
        d["receipt"] = receipt(r.receipt);
        return d;
    }, py::arg("ledger"), py::arg("keystore"), py::arg("broker"), py::arg("variant") = "verified",
       py::arg("fault") = "none", py::arg("fault_persists") = false, py::arg("seed") = 1, py::arg("trial") = 0,
       py::arg("provider") = 2);
    m.def("finish_task", [](ledger::Ledger& l, ledger::Address broker, ledger::Address consumer) {
        const auto r = harness::finish_task(l, broker, consumer);
        py::dict d;
        d["refunded"] = r.refunded;
        d["revalidated"] = r.revalidated;
        d["solution"] = r.solution ? py::object(solution_dict(*r.solution)) : py::none();
        return d;
    }, py::arg("ledger"), py::arg("broker"), py::arg("consumer") = 1);
    m.def("run_benchmark", [](const std::filesystem::path& config) {
        auto cfg = harness::ScenarioConfig::load(config);
        cfg.check();
        const auto maps = cfg.load_maps();
        auto l = harness::make_ledger(cfg, maps);
        harness::KeyStore ks{maps, cfg.keys_dir, cfg.setup_seed};
        harness::BenchmarkResult res;
        {
            py::gil_scoped_release release;
            res = harness::run_benchmark(cfg, l, ks);
        }
        std::ostringstream log;
        l.export_log(log);
        py::dict d;
        d["csv"] = harness::to_csv(res.rows);
        d["gas_csv"] = harness::gas_csv(res.rows);
        d["summary"] = py::module_::import("json").attr("loads")(harness::summary_json(res));
        d["log"] = log.str();
        return d;
    }, "Runs a scenario config end to end on a fresh ledger.");
}
