#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "domains.hpp"
#include "formulas.hpp"
#include "paths.hpp"
#include "render.hpp"
#include "sequences.hpp"
#include "serialize.hpp"
#include "tableaux.hpp"
#include "verify.hpp"

namespace aztec::cli {

enum Exit { ok = 0, failed = 1, invalid = 2, resource = 3 };

namespace detail {

struct Shape {
    std::string mu;
    int kind = 1;

    void attach(CLI::App* app) {
        app->add_option("--mu", mu, "final partition, e.g. 3,2,1 (trailing zeros set the length n)")->required();
        app->add_option("--case", kind, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    }
    Partition partition() const { return parse_partition(mu); }
    Case which() const { return case_from_number(kind); }
};

inline int count(const Shape& sh, const std::string& method, std::ostream& out) {
    Partition mu = sh.partition();
    Case c = sh.which();
    if (method == "det") {
        out << count_sequences(mu, c) << '\n';
    } else if (method == "brute") {
        out << count_tilings(build_domain(mu, c)) << '\n';
    } else {
        auto v = count_by_product(mu, c);
        if (!v) throw UsageError("no product formula for mu=" + format_partition(mu) + " (needs mu = (k,...,1,0,...,0))");
        out << *v << '\n';
    }
    return ok;
}

inline int enumerate(const Shape& sh, const std::string& model, std::size_t limit, std::ostream& out) {
    Partition mu = sh.partition();
    Case c = sh.which();
    out << header_json(model.c_str(), mu, c).dump() << '\n';
    if (model == "sequence") {
        for (const auto& s : enumerate_sequences(mu, c, limit)) out << to_json(s).dump() << '\n';
    } else if (model == "tableau") {
        for (const auto& t : enumerate_tableaux(mu, c, limit)) out << to_json(t).dump() << '\n';
    } else if (model == "paths") {
        for (const auto& f : enumerate_path_families(mu, c, limit)) out << to_json(f).dump() << '\n';
    } else {
        for (const auto& t : enumerate_tilings(build_domain(mu, c), limit)) out << to_json(t).dump() << '\n';
    }
    return ok;
}

inline int crosscheck(const Shape& sh, std::ostream& out) {
    Partition mu = sh.partition();
    Case c = sh.which();
    std::vector<std::pair<std::string, Int>> counts{
        {"tilings", count_tilings(build_domain(mu, c))},
        {"sequences", Int(enumerate_sequences(mu, c).size())},
        {"tableaux", Int(enumerate_tableaux(mu, c).size())},
        {"paths", Int(enumerate_path_families(mu, c).size())},
        {"determinant", count_sequences(mu, c)},
    };
    if (auto p = count_by_product(mu, c)) counts.emplace_back("product", *p);
    bool agree = true;
    for (const auto& [name, v] : counts) {
        out << name << std::string(12 - name.size(), ' ') << v << '\n';
        agree = agree && v == counts.front().second;
    }
    out << (agree ? "agree" : "DISAGREE") << '\n';
    return agree ? ok : failed;
}

inline int verify(const std::string& suite, std::optional<long> kmax, std::ostream& out) {
    auto reports = run_suite(suite, kmax);
    out << to_json(reports).dump(2) << '\n';
    return all_pass(reports) ? ok : failed;
}

inline int render_cmd(const Shape& sh, std::optional<std::size_t> index, const std::string& format, bool marks,
                      const std::string& file, std::ostream& out) {
    Domain dom = build_domain(sh.partition(), sh.which());
    Format f = parse_format(format);
    std::string text;
    if (index) {
        auto tilings = enumerate_tilings(dom, *index + 1);
        if (tilings.size() <= *index)
            throw UsageError("tiling index " + std::to_string(*index) + " out of range (" + std::to_string(tilings.size()) +
                             " tilings)");
        text = render(tilings[*index], f, marks);
    } else {
        text = render(dom, f);
    }
    if (file.empty()) {
        out << text;
        return ok;
    }
    std::ofstream os(file, std::ios::binary);
    if (!os) throw UsageError("cannot open " + file + " for writing");
    os << text;
    return ok;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Generalized Aztec triangles: domino tilings, partition sequences, tableaux and path families"};
    app.name("aztec");
    app.require_subcommand(1);

    detail::Shape shape;
    std::string method = "det", model, suite, format, file;
    std::size_t limit = no_limit;
    std::optional<long> kmax;
    std::optional<std::size_t> index;
    bool marks = false;

    auto* count = app.add_subcommand("count", "print the exact number of tilings / sequences");
    shape.attach(count);
    count->add_option("--method", method, "det, product or brute")->check(CLI::IsMember({"det", "product", "brute"}));

    auto* enumerate = app.add_subcommand("enumerate", "stream objects as JSON lines (header line first)");
    shape.attach(enumerate);
    enumerate->add_option("--model", model, "sequence, tableau, paths or tiling")
        ->required()
        ->check(CLI::IsMember({"sequence", "tableau", "paths", "tiling"}));
    enumerate->add_option("--limit", limit, "stop after N objects of the canonical order");

    auto* crosscheck = app.add_subcommand("crosscheck", "count with every model and compare");
    shape.attach(crosscheck);

    auto* verify = app.add_subcommand("verify", "run an identity suite and print a JSON report");
    verify->add_option("--suite", suite, "delannoy, kernels, id1, id2, detprop, main, degree, case12 or all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--kmax", kmax, "override the suite's upper bound on k");

    auto* render = app.add_subcommand("render", "draw the domain or one of its tilings");
    shape.attach(render);
    render->add_option("--tiling-index", index, "draw the I-th tiling (canonical order, from 0)");
    render->add_option("--format", format, "ascii or svg")->required();
    render->add_flag("--marks", marks, "svg: draw holes and particles");
    render->add_option("-o,--output", file, "write to FILE instead of stdout");

    std::vector<const char*> argv{"aztec"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return invalid;
    }

    try {
        if (*count) return detail::count(shape, method, out);
        if (*enumerate) return detail::enumerate(shape, model, limit, out);
        if (*crosscheck) return detail::crosscheck(shape, out);
        if (*verify) return detail::verify(suite, kmax, out);
        return detail::render_cmd(shape, index, format, marks, file, out);
    } catch (const ResourceError& e) {
        err << "aztec: " << e.what() << '\n';
        return resource;
    } catch (const IdentityViolation& e) {
        err << "aztec: identity check failed: " << e.what() << '\n';
        return failed;
    } catch (const std::invalid_argument& e) {
        err << "aztec: " << e.what() << '\n';
        return invalid;
    } catch (const std::domain_error& e) {
        err << "aztec: " << e.what() << '\n';
        return invalid;
    }
}

}  // namespace aztec::cli
