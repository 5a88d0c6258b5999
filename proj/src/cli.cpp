// Copyright 2026 The magma-lab Authors
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

#include "magma_lab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "magma_lab/core.hpp"
#include "magma_lab/dsl.hpp"
#include "magma_lab/enumerate.hpp"
#include "magma_lab/properties.hpp"
#include "magma_lab/search.hpp"
#include "magma_lab/structures.hpp"
#include "magma_lab/theorems.hpp"

namespace magma_lab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(fmt::format("cannot read '{}'", path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error(fmt::format("cannot write '{}'", path.string()));
    }
}

Magma load_table(const std::string& path) {
    try {
        return parse_table(read_file(path));
    } catch (const Error& e) {
        throw Error(fmt::format("{}: {}", path, e.what()));
    }
}

std::vector<LawId> split_laws(const std::string& list) {
    std::vector<LawId> laws;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= list.size(); ++i) {
        if (i == list.size() || list[i] == ',') {
            laws.push_back(parse_law(std::string_view(list).substr(start, i - start)));
            start = i + 1;
        }
    }
    return laws;
}

OrderRange parse_orders(const std::string& text) {
    const auto dots = text.find("..");
    int lo = 0;
    int hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw Error(fmt::format("malformed order range '{}'", text));
    }
    if (lo < 1 || hi < lo) {
        throw Error(fmt::format("malformed order range '{}'", text));
    }
    return {lo, hi};
}

json rows_json(const Magma& m) { return m.rows(); }

std::string mode_name(EnumMode mode) {
    return mode == EnumMode::latin_squares ? "latin-squares" : "all-magmas";
}

std::string law_list(const std::vector<LawId>& laws) {
    std::string out;
    for (const auto& l : laws) {
        out += (out.empty() ? "" : ", ") + l.name();
    }
    return out;
}

std::string element_set(const std::vector<Element>& es) {
    std::string out = "{";
    for (std::size_t i = 0; i < es.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(int{es[i]});
    }
    return out + "}";
}

struct Options {
    bool json = false;
    int workers = 1;
    bool timings = false;

    // check / classify / canon
    std::string table;
    std::vector<std::string> laws;
    std::string law_file;
    std::string with;

    // enumerate / count
    int order = 1;
    bool latin = false;
    bool up_to_iso = false;
    std::string emit;

    // search
    std::string spec;
    std::string assume;
    std::string refute;
    std::string orders;

    // theorems
    int max_order = 3;
    bool quasigroups = false;
    std::vector<std::string> ids;

    // examples
    int example_id = 0;
};

int cmd_check(const Options& o, std::ostream& out) {
    const Magma m = load_table(o.table);
    std::vector<LawId> laws;
    for (const auto& text : o.laws) {
        laws.push_back(parse_law(text));
    }
    if (!o.law_file.empty()) {
        for (auto& law : parse_law_file(read_file(o.law_file))) {
            laws.push_back(std::move(law));
        }
    }
    if (laws.empty()) {
        throw CLI::ValidationError("check", "at least one --law or --law-file is required");
    }
    bool all = true;
    for (const auto& law : laws) {
        const auto report = check(m, law);
        all = all && report.holds;
        if (o.json) {
            out << to_json(report, m.order()).dump() << '\n';
        } else if (report.holds) {
            out << law.name() << ": holds\n";
        } else if (report.witness->empty()) {
            out << law.name() << ": fails (" << report.detail.dump() << ")\n";
        } else {
            out << law.name() << ": fails at " << format_assignment(*report.witness) << '\n';
        }
    }
    return all ? kOk : kNegative;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const Magma m = load_table(o.table);
    const auto report = classify(m);
    std::vector<std::string> labels;
    for (const auto k : report.labels) {
        labels.emplace_back(structure_name(k));
    }
    if (o.json) {
        json j{{"order", m.order()},
               {"labels", labels},
               {"neutral",
                {{"left", report.neutrals.left},
                 {"right", report.neutrals.right},
                 {"two_sided", report.neutrals.two_sided ? json(*report.neutrals.two_sided)
                                                         : json(nullptr)}}}};
        if (report.inverses) {
            j["inverses"] = *report.inverses;
        }
        out << j.dump() << '\n';
        return kOk;
    }
    std::string joined;
    for (const auto& l : labels) {
        joined += (joined.empty() ? "" : ", ") + l;
    }
    out << "labels: " << joined << '\n';
    out << "left neutrals: " << element_set(report.neutrals.left) << '\n';
    out << "right neutrals: " << element_set(report.neutrals.right) << '\n';
    out << "neutral: "
        << (report.neutrals.two_sided ? std::to_string(int{*report.neutrals.two_sided})
                                      : std::string("none"))
        << '\n';
    if (report.inverses) {
        out << "inverses: " << element_set(*report.inverses) << '\n';
    }
    return kOk;
}

int cmd_canon(const Options& o, std::ostream& out) {
    const Magma m = load_table(o.table);
    const Magma canon = canonical_form(m);
    if (o.with.empty()) {
        if (o.json) {
            out << json{{"order", m.order()}, {"canonical", rows_json(canon)}}.dump() << '\n';
        } else {
            out << format_table(canon);
        }
        return kOk;
    }
    const bool iso = is_isomorphic(m, load_table(o.with));
    if (o.json) {
        out << json{{"order", m.order()}, {"canonical", rows_json(canon)}, {"isomorphic", iso}}
                   .dump()
            << '\n';
    } else {
        out << (iso ? "isomorphic" : "not isomorphic") << '\n';
    }
    return iso ? kOk : kNegative;
}

EnumSpec enum_spec(const Options& o) {
    EnumSpec spec;
    spec.order = o.order;
    spec.mode = o.latin ? EnumMode::latin_squares : EnumMode::all_magmas;
    spec.up_to_iso = o.up_to_iso;
    for (const auto& text : o.laws) {
        for (auto& law : split_laws(text)) {
            spec.constraints.push_back(std::move(law));
        }
    }
    return spec;
}

std::string padded(std::uint64_t index) { return fmt::format("{:06d}.cay", index); }

int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto spec = enum_spec(o);
    check_feasible(spec);
    if (!o.emit.empty()) {
        fs::create_directories(o.emit);
    }
    std::uint64_t index = 0;
    enumerate(
        spec,
        [&](const Magma& m) {
            if (!o.emit.empty()) {
                write_file(fs::path(o.emit) / padded(index), format_table(m));
            } else if (o.json) {
                out << json{{"index", index}, {"order", m.order()}, {"table", rows_json(m)}}.dump()
                    << '\n';
            } else {
                out << "# table " << index << '\n' << format_table(m);
            }
            ++index;
        },
        {o.workers});
    if (!o.emit.empty()) {
        if (o.json) {
            out << json{{"order", spec.order}, {"written", index}, {"dir", o.emit}}.dump() << '\n';
        } else {
            out << "wrote " << index << " tables to " << o.emit << '\n';
        }
    }
    return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
    const auto spec = enum_spec(o);
    const auto n = count(spec, {o.workers});
    if (o.json) {
        std::vector<std::string> names;
        for (const auto& l : spec.constraints) {
            names.push_back(l.name());
        }
        out << json{{"order", spec.order},
                    {"mode", mode_name(spec.mode)},
                    {"up_to_iso", spec.up_to_iso},
                    {"constraints", names},
                    {"count", n}}
                   .dump()
            << '\n';
    } else {
        out << n << '\n';
    }
    return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
    SearchSpec spec;
    if (!o.spec.empty()) {
        if (!o.assume.empty() || !o.refute.empty() || !o.orders.empty()) {
            throw CLI::ValidationError("search", "--spec excludes --assume/--refute/--orders");
        }
        spec = parse_spec(o.spec);
    } else {
        if (o.refute.empty() || o.orders.empty()) {
            throw CLI::ValidationError("search",
                                       "give --spec, or --refute and --orders (with --assume)");
        }
        if (!o.assume.empty()) {
            spec.assume = split_laws(o.assume);
        }
        spec.refute = parse_law(o.refute);
        spec.orders = parse_orders(o.orders);
    }
    spec.up_to_iso = o.up_to_iso;
    const auto result = find_model(spec, {o.workers});
    if (result.found && !o.emit.empty()) {
        write_file(o.emit, format_table(*result.found));
    }
    if (o.json) {
        json j{{"found", result.found.has_value()},
               {"assume", law_list(spec.assume)},
               {"refute", spec.refute.name()},
               {"orders", {spec.orders.lo, spec.orders.hi}},
               {"structures_examined", result.structures_examined}};
        j["orders_exhausted"] = result.orders_exhausted.empty()
                                    ? json(nullptr)
                                    : json{result.orders_exhausted.lo, result.orders_exhausted.hi};
        j["table"] = result.found ? rows_json(*result.found) : json(nullptr);
        out << j.dump() << '\n';
    } else if (result.found) {
        out << fmt::format("found at order {} after {} structures\n", result.found->order(),
                           result.structures_examined)
            << format_table(*result.found);
    } else {
        out << fmt::format("exhausted orders {}..{} ({} structures): no model\n",
                           result.orders_exhausted.lo, result.orders_exhausted.hi,
                           result.structures_examined);
    }
    return result.found ? kOk : kNegative;
}

int cmd_theorems(const Options& o, std::ostream& out) {
    std::vector<const TheoremSpec*> selected;
    for (const auto& t : theorem_catalog()) {
        const bool wanted_domain = !o.quasigroups || t.domain == TheoremDomain::quasigroups;
        const bool wanted_id =
            o.ids.empty() || std::find(o.ids.begin(), o.ids.end(), t.id) != o.ids.end();
        if (wanted_domain && wanted_id) {
            selected.push_back(&t);
        }
    }
    for (const auto& id : o.ids) {
        theorem_by_id(id);
    }
    // Validate every order before running anything.
    for (const auto* t : selected) {
        const int cap = theorem_order_cap(t->domain);
        if (o.max_order < 1 || o.max_order > cap) {
            throw InfeasibleError(fmt::format(
                "{}: --max-order {} outside 1..{} for domain {} (use --quasigroups for "
                "T8-T11 only)",
                t->id, o.max_order, cap, domain_name(t->domain)));
        }
    }
    bool all = true;
    for (const auto* t : selected) {
        const auto report = verify_theorem(*t, o.max_order, {o.workers});
        all = all && report.passed();
        if (o.json) {
            json j{{"id", t->id},
                   {"domain", domain_name(t->domain)},
                   {"max_order", o.max_order},
                   {"examined", report.structures_examined},
                   {"pass", report.passed()}};
            if (!report.passed()) {
                j["counterexample"] = rows_json(*report.counterexample);
                j["clause"] = t->clauses[*report.failed_clause].to_string();
            }
            if (o.timings) {
                j["elapsed_s"] = report.elapsed.count();
            }
            out << j.dump() << '\n';
            continue;
        }
        std::string line = fmt::format("{:<4} {:<12} examined={:<7} {}", t->id,
                                       domain_name(t->domain), report.structures_examined,
                                       report.passed() ? "PASS" : "FAIL");
        if (report.passed()) {
            line += fmt::format("  no counterexample up to order {}", o.max_order);
        } else {
            line += "  counterexample to " + t->clauses[*report.failed_clause].to_string();
        }
        if (o.timings) {
            line += fmt::format("  {:.3f}s", report.elapsed.count());
        }
        out << line << '\n';
        if (!report.passed()) {
            std::istringstream table(format_table(*report.counterexample));
            for (std::string row; std::getline(table, row);) {
                out << "     | " << row << '\n';
            }
        }
    }
    return all ? kOk : kNegative;
}

std::string verdict(bool holds) { return holds ? "holds" : "fails"; }

int cmd_examples(const Options& o, std::ostream& out) {
    if (o.example_id != 0 && (o.example_id < 1 || o.example_id > 9)) {
        throw CLI::ValidationError("--id", "example id must be 1..9");
    }
    const auto suite = example_suite();
    if (!o.emit.empty()) {
        fs::create_directories(o.emit);
    }
    bool clean = true;
    for (const auto& entry : suite) {
        if (o.example_id != 0 && entry.example != o.example_id) {
            continue;
        }
        const auto& s = entry.structure;
        if (!o.emit.empty() && s.table) {
            write_file(fs::path(o.emit) / (s.label() + ".cay"), format_table(*s.table));
        }
        for (const auto& row : entry.rows) {
            clean = clean && (row.agrees() || row.documented);
        }
        if (o.json) {
            json rows = json::array();
            for (const auto& row : entry.rows) {
                rows.push_back({{"law", tag_name(row.law)},
                                {"claimed", row.claimed},
                                {"actual", row.actual},
                                {"agrees", row.agrees()},
                                {"documented", row.documented},
                                {"note", row.note}});
            }
            json j{{"example", entry.example},
                   {"structure", s.label()},
                   {"kind", s.finite() ? "finite" : "windowed"},
                   {"rows", rows}};
            if (entry.classification) {
                std::vector<std::string> labels;
                for (const auto k : entry.classification->labels) {
                    labels.emplace_back(structure_name(k));
                }
                j["labels"] = labels;
            }
            out << j.dump() << '\n';
            continue;
        }
        out << fmt::format("Example {}: {} ({})\n", entry.example, s.label(),
                           s.finite() ? fmt::format("finite, order {}", s.table->order())
                                      : "window " + s.window->description);
        if (entry.classification) {
            std::string labels;
            for (const auto k : entry.classification->labels) {
                labels += (labels.empty() ? "" : ", ") + std::string(structure_name(k));
            }
            out << "  classified: " << labels << '\n';
        }
        for (const auto& row : entry.rows) {
            std::string status;
            if (row.agrees()) {
                status = row.documented ? "ok, flagged" : "ok";
            } else {
                status = row.documented ? "DISCREPANCY (documented)" : "DISCREPANCY";
            }
            std::string line = fmt::format("  {:<5} claimed={} actual={}  {}", tag_name(row.law),
                                           verdict(row.claimed), verdict(row.actual), status);
            if (!row.note.empty()) {
                line += "  [" + row.note + "]";
            }
            out << line << '\n';
        }
    }
    return clean ? kOk : kNegative;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite magma workbench: check, classify, enumerate and search Cayley tables",
                 "magma_lab"};
    app.require_subcommand(1);
    Options o;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "Emit JSON reports");
        sub->add_option("--workers", o.workers, "Worker threads for enumeration")
            ->check(CLI::Range(1, 256));
    };

    auto* check_cmd = app.add_subcommand("check", "Check laws on a Cayley table");
    check_cmd->add_option("--table", o.table, "Cayley file")->required();
    check_cmd->add_option("--law", o.laws, "Law name or equation (repeatable)");
    check_cmd->add_option("--law-file", o.law_file, ".law file, one law per line");
    add_common(check_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "Name the structures a table is");
    classify_cmd->add_option("--table", o.table, "Cayley file")->required();
    add_common(classify_cmd);

    auto* canon_cmd = app.add_subcommand("canon", "Canonical form / isomorphism test");
    canon_cmd->add_option("--table", o.table, "Cayley file")->required();
    canon_cmd->add_option("--with", o.with, "Second Cayley file to compare with");
    add_common(canon_cmd);

    const auto add_enum = [&](CLI::App* sub) {
        sub->add_option("--order", o.order, "Order of the tables")->required();
        sub->add_flag("--latin", o.latin, "Latin squares only");
        sub->add_option("--law", o.laws, "Constraint law(s), comma-separated or repeated");
        sub->add_flag("--up-to-iso", o.up_to_iso, "Only canonical representatives");
        add_common(sub);
    };
    auto* enum_cmd = app.add_subcommand("enumerate", "List every table of an order");
    add_enum(enum_cmd);
    enum_cmd->add_option("--emit", o.emit, "Directory to write one Cayley file per table");
    auto* count_cmd = app.add_subcommand("count", "Count the tables of an order");
    add_enum(count_cmd);

    auto* search_cmd = app.add_subcommand("search", "Find a model of assume + not refute");
    search_cmd->add_option("--spec", o.spec, "\"assume L, ...; refute L; orders A..B\"");
    search_cmd->add_option("--assume", o.assume, "Comma-separated assumed laws");
    search_cmd->add_option("--refute", o.refute, "Law the model must violate");
    search_cmd->add_option("--orders", o.orders, "Order range A..B");
    search_cmd->add_flag("--up-to-iso", o.up_to_iso, "Only canonical representatives");
    search_cmd->add_option("--emit", o.emit, "Write the model to this Cayley file");
    add_common(search_cmd);

    auto* theorems_cmd = app.add_subcommand("theorems", "Verify the theorem catalog");
    theorems_cmd->add_option("--max-order", o.max_order, "Largest order examined");
    theorems_cmd->add_flag("--quasigroups", o.quasigroups, "Only the quasigroup theorems");
    theorems_cmd->add_option("--id", o.ids, "Theorem id (repeatable), e.g. T5");
    theorems_cmd->add_flag("--timings", o.timings, "Append elapsed time");
    add_common(theorems_cmd);

    auto* examples_cmd = app.add_subcommand("examples", "Check the built-in examples");
    examples_cmd->add_option("--id", o.example_id, "Example number 1..9");
    examples_cmd->add_option("--emit", o.emit, "Directory for the finite examples' tables");
    add_common(examples_cmd);

    std::vector<std::string> argv_storage{"magma_lab"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (check_cmd->parsed()) {
            return cmd_check(o, out);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(o, out);
        }
        if (canon_cmd->parsed()) {
            return cmd_canon(o, out);
        }
        if (enum_cmd->parsed()) {
            return cmd_enumerate(o, out);
        }
        if (count_cmd->parsed()) {
            return cmd_count(o, out);
        }
        if (search_cmd->parsed()) {
            return cmd_search(o, out);
        }
        if (theorems_cmd->parsed()) {
            return cmd_theorems(o, out);
        }
        return cmd_examples(o, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace magma_lab::cli
