#include "cellkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cellkit/cache.hpp"
#include "cellkit/report.hpp"

namespace cellkit {

namespace {

enum class Format { text, json, csv };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StrictCacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string cache_dir;
    std::string format = "text";
    bool force = false;
    bool strict_cache = false;
};

class Session {
public:
    Session(const Globals& globals, std::string command, std::ostream& out, std::ostream& err)
        : out(out), err(err), globals_(globals), command_(std::move(command)) {
        format = globals.format == "json" ? Format::json : globals.format == "csv" ? Format::csv : Format::text;
    }

    const std::string& command() const { return command_; }

    KLTablePtr kl(int n) {
        if (globals_.cache_dir.empty()) return KLTable::build(n);
        const auto file = cache_path(globals_.cache_dir, CacheKind::kl_table, n);
        if (std::filesystem::exists(file)) {
            try {
                return load_kl_table(file, n);
            } catch (const CacheError& e) {
                stale(file, e);
            }
        }
        auto table = KLTable::build(n);
        save_kl_table(file, *table);
        return table;
    }

    HTensorPtr tensor(const KLTable& table, bool use_cache) {
        const int n = table.n();
        if (!use_cache || globals_.cache_dir.empty()) return HTensor::compute(table);
        const auto file = cache_path(globals_.cache_dir, CacheKind::h_tensor, n);
        if (std::filesystem::exists(file)) {
            try {
                return load_h_tensor(file, n);
            } catch (const CacheError& e) {
                stale(file, e);
            }
        }
        auto tensor = HTensor::compute(table);
        save_h_tensor(file, *tensor);
        return tensor;
    }

    void emit(const Json& doc) { out << doc.dump(2) << "\n"; }

    Format format;
    std::ostream& out;
    std::ostream& err;

private:
    void stale(const std::filesystem::path& file, const CacheError& e) {
        if (globals_.strict_cache) throw StrictCacheError(file.string() + ": " + e.what());
        err << "warning: " << file.string() << ": " << e.what() << "; recomputing\n";
    }

    Globals globals_;
    std::string command_;
};

// Splits at commas outside brackets: "[1,2],[2,1]" -> {"[1,2]", "[2,1]"}.
std::vector<std::string> split_top(const std::string& text) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char c : text) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ',' && depth == 0) out.emplace_back();
        else out.back() += c;
    }
    return out;
}

Perm parse_perm(const std::string& text, int n) {
    try {
        return Perm::parse(text, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void check_rank(int n, bool heavy, const Globals& globals) {
    if (n < 1 || n > 8) throw UsageError("--n must lie in 1..8");
    if (heavy && n >= 7 && !globals.force) throw UsageError("n >= 7 needs the full h-tensor; pass --force to proceed");
}

std::string perm_str(const SymmetricGroup& g, int w) { return g.element(w).to_string(); }

// kl

int cmd_kl(Session& s, int n, const std::string& pair) {
    const auto table = s.kl(n);
    const SymmetricGroup& g = *table->group();
    if (!pair.empty()) {
        const auto parts = split_top(pair);
        if (parts.size() != 2) throw UsageError("--pair expects Y,W");
        const int y = g.index_of(parse_perm(parts[0], n));
        const int w = g.index_of(parse_perm(parts[1], n));
        const Laurent& p = table->p(y, w);
        const int mu = y < w ? table->mu(y, w) : 0;
        const bool leq = bruhat_leq(g.element(y), g.element(w));
        switch (s.format) {
            case Format::json:
                s.emit(report_doc(s.command(), n, {{"y", perm_str(g, y)}, {"w", perm_str(g, w)}, {"p", p}, {"mu", mu}, {"bruhat_leq", leq}}, true));
                break;
            case Format::csv:
                s.out << csv_row({"y", "w", "p", "mu"}) << csv_row({perm_str(g, y), perm_str(g, w), p.to_string(), std::to_string(mu)});
                break;
            case Format::text:
                s.out << "p(" << perm_str(g, y) << ", " << perm_str(g, w) << ") = " << p << "\n"
                      << "mu = " << mu << "\n";
                break;
        }
        return 0;
    }
    Json entries = Json::array();
    if (s.format == Format::csv) s.out << csv_row({"y", "w", "p", "mu"});
    for (int w = 0; w < g.size(); ++w)
        for (int y = 0; y < w; ++y) {
            const Laurent& p = table->p(y, w);
            if (p.is_zero()) continue;
            const int mu = table->mu(y, w);
            if (s.format == Format::json) entries.push_back({{"y", perm_str(g, y)}, {"w", perm_str(g, w)}, {"p", p}, {"mu", mu}});
            else if (s.format == Format::csv) s.out << csv_row({perm_str(g, y), perm_str(g, w), p.to_string(), std::to_string(mu)});
            else s.out << perm_str(g, y) << " " << perm_str(g, w) << "  " << p << "  mu=" << mu << "\n";
        }
    if (s.format == Format::json) s.emit(report_doc(s.command(), n, {{"entries", entries}}, true));
    return 0;
}

// cells

int cmd_cells(Session& s, int n, const std::string& side_text) {
    Side side;
    if (side_text == "left") side = Side::left;
    else if (side_text == "right") side = Side::right;
    else if (side_text == "two") side = Side::two;
    else throw UsageError("--side must be left, right or two");
    const auto table = s.kl(n);
    const SymmetricGroup& g = *table->group();
    const CellPartition cells{Preorder(*table, side)};
    switch (s.format) {
        case Format::json: {
            Json list = Json::array(), order = Json::array();
            for (const auto& cell : cells.cells()) {
                Json elems = Json::array();
                for (int w : cell) elems.push_back(perm_str(g, w));
                list.push_back(elems);
            }
            for (int a = 0; a < cells.count(); ++a)
                for (int b = 0; b < cells.count(); ++b)
                    if (a != b && cells.leq(a, b)) order.push_back({a + 1, b + 1});
            s.emit(report_doc(s.command(), n, {{"side", side_name(side)}, {"count", cells.count()}, {"cells", list}, {"order", order}}, true));
            break;
        }
        case Format::csv:
            s.out << csv_row({"cell", "element"});
            for (int c = 0; c < cells.count(); ++c)
                for (int w : cells.cells()[static_cast<size_t>(c)]) s.out << csv_row({std::to_string(c + 1), perm_str(g, w)});
            break;
        case Format::text:
            s.out << cells.count() << " " << side_name(side) << " cells\n";
            for (int c = 0; c < cells.count(); ++c) {
                s.out << c + 1 << ":";
                for (int w : cells.cells()[static_cast<size_t>(c)]) s.out << " " << perm_str(g, w);
                s.out << "\n";
            }
            for (int a = 0; a < cells.count(); ++a)
                for (int b = 0; b < cells.count(); ++b)
                    if (a != b && cells.leq(a, b)) s.out << a + 1 << " <= " << b + 1 << "\n";
            break;
    }
    return 0;
}

// murphy

Partition parse_lambda(const std::string& text, int n) {
    Partition lambda;
    try {
        lambda = Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (lambda.size() != n) throw UsageError("partition " + lambda.to_string() + " is not a partition of " + std::to_string(n));
    return lambda;
}

int cmd_murphy(Session& s, int n, const std::string& lambda_text, bool to_c) {
    const Partition lambda = parse_lambda(lambda_text, n);
    const auto table = s.kl(n);
    const SymmetricGroup& g = *table->group();
    const CellPartition left{Preorder(*table, Side::left)}, right{Preorder(*table, Side::right)};
    const IndexMap imap = index_map(lambda, *table, left, right);
    Json elements = Json::array(), failures = Json::array();
    if (s.format == Format::csv) s.out << csv_row({"d_s", "d_t", "element", "coefficient", "leading"});
    for (const auto& ts : imap.tableaux)
        for (const auto& tt : imap.tableaux) {
            const TableauPair pair{ts, tt};
            const std::string ds = d_of_tableau(ts).word_string(), dt = d_of_tableau(tt).word_string();
            HeckeElt elem = murphy_element(pair, MurphyVariant::y, *table);
            std::optional<int> leading;
            if (to_c) {
                try {
                    const BaseChange bc = base_change(pair, imap, *table);
                    elem = bc.expansion;
                    leading = bc.leading;
                } catch (const ClassificationError& e) {
                    elem = convert_basis(elem, Basis::C, *table);
                    failures.push_back({{"d_s", ds}, {"d_t", dt}, {"detail", e.what()},
                                        {"element", e.element >= 0 ? perm_str(g, e.element) : ""},
                                        {"reproduce", "cellkit murphy --n " + std::to_string(n) + " --lambda " + lambda.to_csv() + " --to-c"}});
                }
            }
            switch (s.format) {
                case Format::json: {
                    Json e = {{"s", ts.to_string()}, {"t", tt.to_string()}, {"d_s", ds}, {"d_t", dt},
                              {"basis", basis_name(elem.basis())}, {"terms", hecke_json(elem)}};
                    if (leading) e["leading"] = perm_str(g, *leading);
                    elements.push_back(e);
                    break;
                }
                case Format::csv:
                    for (int w : elem.support())
                        s.out << csv_row({ds, dt, perm_str(g, w), elem.coeff(w).to_string(), leading && *leading == w ? "1" : "0"});
                    break;
                case Format::text:
                    s.out << "y~(" << ds << "," << dt << ") = " << hecke_words(elem);
                    if (leading) s.out << "   [leading " << g.element(*leading).word_string() << "]";
                    s.out << "\n";
                    break;
            }
        }
    if (s.format == Format::json)
        s.emit(report_doc(s.command(), n, {{"lambda", lambda.to_csv()}, {"elements", elements}}, failures.empty(), failures));
    else
        for (const auto& f : failures) s.err << "FAIL " << f["d_s"].get<std::string>() << "," << f["d_t"].get<std::string>() << ": " << f["detail"].get<std::string>() << "\n";
    return failures.empty() ? 0 : 1;
}

// zelem

int cmd_zelem(Session& s, int n, const std::string& w_text) {
    const auto table = s.kl(n);
    const SymmetricGroup& g = *table->group();
    const int w = g.index_of(parse_perm(w_text, n));
    const Partition lambda = shape_of(g.element(w));
    const CellPartition left{Preorder(*table, Side::left)}, right{Preorder(*table, Side::right)};
    const IndexMap imap = index_map(lambda, *table, left, right);
    const auto pos = imap.locate(w);
    Json result = {{"w", perm_str(g, w)}, {"lambda", lambda.to_csv()}, {"i", pos->first + 1}, {"j", pos->second + 1}};
    std::vector<std::string> problems;
    HeckeElt z;
    try {
        z = z_element(w, imap, *table);
        result["integral"] = true;
    } catch (const DivisionFailure& e) {
        result["integral"] = false;
        problems.push_back(std::string("division by P_lambda fails: ") + e.what());
    }
    if (problems.empty()) {
        const HeckeElt zt = convert_basis(z, Basis::T, *table);
        const bool bar_ok = apply_involution(zt, Involution::bar) == zt;
        if (!bar_ok) problems.push_back("Z_w is not bar-invariant");
        const HeckeElt rest = z - HeckeElt::basis_element(table->group(), Basis::C, w);
        bool higher_ok = true;
        for (int y : rest.support()) {
            const Partition mu = shape_of(g.element(y));
            if (mu == lambda || !lambda.dominated_by(mu)) {
                higher_ok = false;
                problems.push_back("Z_w - C_w has a term at " + perm_str(g, y) + " of shape " + mu.to_string());
            }
        }
        result["terms"] = hecke_json(z);
        result["bar_invariant"] = bar_ok;
        result["remainder_in_higher_ideal"] = higher_ok;
    }
    Json failures = Json::array();
    for (const auto& p : problems) failures.push_back({{"detail", p}, {"reproduce", "cellkit zelem --n " + std::to_string(n) + " --w " + perm_str(g, w)}});
    switch (s.format) {
        case Format::json: s.emit(report_doc(s.command(), n, result, problems.empty(), failures)); break;
        case Format::csv:
            s.out << csv_row({"element", "coefficient"});
            if (!z.group()) break;
            for (int y : z.support()) s.out << csv_row({perm_str(g, y), z.coeff(y).to_string()});
            break;
        case Format::text:
            s.out << "w = " << perm_str(g, w) << " in grid(" << pos->first + 1 << "," << pos->second + 1 << ") for " << lambda.to_string() << "\n";
            if (z.group()) s.out << "Z_w = " << hecke_words(z) << "\n";
            break;
    }
    for (const auto& p : problems) s.err << "FAIL " << p << "\n";
    return problems.empty() ? 0 : 1;
}

// afn

int cmd_afn(Session& s, int n) {
    const auto table = s.kl(n);
    const SymmetricGroup& g = *table->group();
    const auto tensor = s.tensor(*table, true);
    const AData adata = compute_adata(*tensor, *table);
    Json rows = Json::array(), failures = Json::array();
    if (s.format == Format::csv) s.out << csv_row({"w", "word", "a", "delta", "n", "shape", "l_w_lambda"});
    if (s.format == Format::text) s.out << "w  a  delta  n  shape  l(w_lambda)\n";
    for (int z = 0; z < g.size(); ++z) {
        const size_t k = static_cast<size_t>(z);
        const int lw = young_data(adata.shape[k]).longest.length();
        if (lw != adata.a[k])
            failures.push_back({{"detail", "a(w) != l(w_lambda)"}, {"witness", perm_str(g, z)}, {"reproduce", "cellkit afn --n " + std::to_string(n)}});
        const std::string word = g.element(z).word_string();
        switch (s.format) {
            case Format::json:
                rows.push_back({{"w", perm_str(g, z)}, {"word", word}, {"a", adata.a[k]}, {"delta", adata.delta[k]},
                                {"n", adata.n[k].to_string()}, {"shape", adata.shape[k].to_csv()}, {"l_w_lambda", lw}});
                break;
            case Format::csv:
                s.out << csv_row({perm_str(g, z), word, std::to_string(adata.a[k]), std::to_string(adata.delta[k]), adata.n[k].to_string(),
                                  adata.shape[k].to_csv(), std::to_string(lw)});
                break;
            case Format::text:
                s.out << perm_str(g, z) << "  " << adata.a[k] << "  " << adata.delta[k] << "  " << adata.n[k] << "  "
                      << adata.shape[k].to_string() << "  " << lw << "\n";
                break;
        }
    }
    if (s.format == Format::json) s.emit(report_doc(s.command(), n, {{"rows", rows}}, failures.empty(), failures));
    return failures.empty() ? 0 : 1;
}

// verify

std::set<int> parse_props(const std::string& text) {
    std::set<int> out;
    if (text.empty()) return out;
    for (std::string item : split_top(text)) {
        if (!item.empty() && (item[0] == 'P' || item[0] == 'p')) item.erase(0, 1);
        int k = 0;
        try {
            size_t used = 0;
            k = std::stoi(item, &used);
            if (used != item.size()) k = 0;
        } catch (const std::exception&) {
            k = 0;
        }
        if (k < 1 || k > 15) throw UsageError("--props expects numbers in 1..15, got '" + item + "'");
        out.insert(k);
    }
    return out;
}

int cmd_verify(Session& s, int n, const std::string& props, long long sample, std::uint64_t seed, const std::string& inject) {
    VerifyOptions options;
    options.properties = parse_props(props);
    options.p15_sample = sample >= 0 ? sample : (n <= 4 ? 0 : kDefaultP15Sample);
    options.seed = seed;
    auto base = s.kl(n);
    std::string prefix = "cellkit verify --n " + std::to_string(n);
    KLTablePtr table = base;
    if (!inject.empty()) {
        const auto parts = split_top(inject);
        if (parts.size() != 3) throw UsageError("--inject-mu expects Y,W,VALUE");
        const SymmetricGroup& g = *base->group();
        const int y = g.index_of(parse_perm(parts[0], n));
        const int w = g.index_of(parse_perm(parts[1], n));
        int value = 0;
        try {
            value = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw UsageError("--inject-mu VALUE must be an integer");
        }
        if (y >= w) throw UsageError("--inject-mu needs Y before W in length-lex order");
        bool read = false;
        for (int i = 1; i < n; ++i) read |= g.is_left_descent(i, y) && !g.is_left_descent(i, w);
        if (!read) s.err << "note: every left descent of Y is one of W, so mu(Y,W) never enters a product and the injection has no effect\n";
        auto copy = std::make_shared<KLTable>(*base);
        copy->inject_mu(y, w, value);
        table = copy;
        prefix += " --inject-mu " + inject;
    }
    if (options.p15_sample > 0) prefix += " --sample " + std::to_string(options.p15_sample) + " --seed " + std::to_string(options.seed);
    const auto tensor = s.tensor(*table, inject.empty());
    const PropertyReport report = verify_properties(*table, *tensor, options);
    const SymmetricGroup& g = *table->group();
    const Json props_json = property_report_json(report, g, prefix);
    Json failures = Json::array();
    for (const auto& p : props_json)
        if (p["status"] == "fail") failures.push_back(p);
    switch (s.format) {
        case Format::json: s.emit(report_doc(s.command(), n, {{"properties", props_json}}, report.all_pass(), failures)); break;
        case Format::csv:
            s.out << csv_row({"property", "status", "scope", "checked", "witness"});
            for (const auto& r : report.results) {
                std::string witness;
                for (int w : r.witness) witness += (witness.empty() ? "" : " ") + perm_str(g, w);
                s.out << csv_row({"P" + std::to_string(r.number), status_name(r.status), r.scope, std::to_string(r.checked), witness});
            }
            break;
        case Format::text:
            for (const auto& r : report.results) {
                s.out << "P" << r.number << "  " << status_name(r.status);
                if (r.status != PropertyResult::Status::skipped) s.out << "  " << r.scope << "  " << r.checked << " checked";
                if (r.status == PropertyResult::Status::fail) {
                    s.out << "  witness";
                    for (int w : r.witness) s.out << " " << perm_str(g, w);
                    s.out << "  (" << r.detail << ")  reproduce: " << prefix << " --props " << r.number;
                }
                s.out << "\n";
            }
            s.out << (report.all_pass() ? "all checked properties hold" : "FAILED") << "\n";
            break;
    }
    return report.all_pass() ? 0 : 1;
}

// jring

int cmd_jring(Session& s, int n) {
    const auto table = s.kl(n);
    const SymmetricGroup& g = *table->group();
    const auto tensor = s.tensor(*table, true);
    const AData adata = compute_adata(*tensor, *table);
    const JRing ring(*tensor, adata);
    const CellPartition left{Preorder(*table, Side::left)}, right{Preorder(*table, Side::right)};
    std::vector<IndexMap> maps;
    Json blocks = Json::array();
    for (const Partition& lambda : Partition::all(n)) {
        maps.push_back(index_map(lambda, *table, left, right));
        blocks.push_back({{"lambda", lambda.to_csv()}, {"d", maps.back().dim()}});
    }
    Json failures = Json::array();
    const std::string reproduce = "cellkit jring --n " + std::to_string(n);
    auto witness = [&](std::vector<int> ws) {
        Json out = Json::array();
        for (int w : ws) out.push_back(perm_str(g, w));
        return out;
    };
    const auto assoc = ring.associativity_failure();
    if (assoc) failures.push_back({{"check", "associativity"}, {"witness", witness(*assoc)}, {"reproduce", reproduce}});
    const auto ident = ring.identity_failure();
    if (ident) failures.push_back({{"check", "identity"}, {"witness", witness({*ident})}, {"reproduce", reproduce}});
    const auto units = ring.matrix_unit_failure(maps);
    if (units) failures.push_back({{"check", "matrix_units"}, {"witness", witness({units->first, units->second})}, {"reproduce", reproduce}});
    Json identity = Json::array();
    for (const auto& [d, c] : ring.identity()) identity.push_back({perm_str(g, d), c.to_string()});
    const bool pass = failures.empty();
    switch (s.format) {
        case Format::json:
            s.emit(report_doc(s.command(), n,
                              {{"blocks", blocks}, {"identity", identity}, {"associative", !assoc}, {"identity_ok", !ident}, {"matrix_units", !units}},
                              pass, failures));
            break;
        case Format::csv:
            s.out << csv_row({"check", "status"}) << csv_row({"associativity", assoc ? "fail" : "pass"})
                  << csv_row({"identity", ident ? "fail" : "pass"}) << csv_row({"matrix_units", units ? "fail" : "pass"});
            break;
        case Format::text:
            s.out << "J decomposes into blocks";
            for (const auto& b : blocks) s.out << " M_" << b["d"].get<int>() << "(" << b["lambda"].get<std::string>() << ")";
            s.out << "\nassociativity: " << (assoc ? "fail" : "pass") << "\nidentity: " << (ident ? "fail" : "pass")
                  << "\nmatrix units: " << (units ? "fail" : "pass") << "\n";
            break;
    }
    return pass ? 0 : 1;
}

// rsk

int cmd_rsk(Session& s, const std::string& perm_text, int n) {
    const Perm w = parse_perm(perm_text, n);
    const RskResult r = rsk(w);
    switch (s.format) {
        case Format::json:
            s.emit(report_doc(s.command(), w.n(), {{"perm", w.to_string()}, {"shape", r.shape.to_csv()}, {"P", r.insertion.to_string()}, {"Q", r.recording.to_string()}},
                              true));
            break;
        case Format::csv:
            s.out << csv_row({"perm", "shape", "P", "Q"}) << csv_row({w.to_string(), r.shape.to_csv(), r.insertion.to_string(), r.recording.to_string()});
            break;
        case Format::text:
            s.out << "shape " << r.shape << "\nP " << r.insertion << "\nQ " << r.recording << "\n";
            break;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kazhdan-Lusztig cells, Murphy bases and Lusztig's ring J for the symmetric group", "cellkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_option("--cache-dir", globals.cache_dir, "Directory for cached KL tables and h-tensors")->envname("CELLKIT_CACHE");
    app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--force", globals.force, "Allow n >= 7 for commands that need the full h-tensor");
    app.add_flag("--strict-cache", globals.strict_cache, "Exit with status 3 on a corrupt cache instead of recomputing");

    int n = 0;
    std::string pair, side, lambda, w_text, props, inject, perm_text;
    bool to_c = false;
    long long sample = -1;
    std::uint64_t seed = VerifyOptions{}.seed;

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials p_{y,w} and mu(y,w)");
    kl->add_option("--n", n, "Rank")->required();
    kl->add_option("--pair", pair, "Y,W");
    auto* cells = app.add_subcommand("cells", "Left, right or two-sided cells");
    cells->add_option("--n", n, "Rank")->required();
    cells->add_option("--side", side, "left|right|two")->required();
    auto* murphy = app.add_subcommand("murphy", "Murphy basis elements y~_st for one partition");
    murphy->add_option("--n", n, "Rank")->required();
    murphy->add_option("--lambda", lambda, "Partition, e.g. 3,1")->required();
    murphy->add_flag("--to-c", to_c, "Expand in the C-basis and classify the terms");
    auto* zelem = app.add_subcommand("zelem", "The element Z_w in the C-basis");
    zelem->add_option("--n", n, "Rank")->required();
    zelem->add_option("--w", w_text, "Permutation")->required();
    auto* afn = app.add_subcommand("afn", "Table of a(w), Delta(w), n_w and shapes");
    afn->add_option("--n", n, "Rank")->required();
    auto* verify = app.add_subcommand("verify", "Check P1-P15");
    verify->add_option("--n", n, "Rank")->required();
    verify->add_option("--props", props, "Comma-separated property numbers (default all)");
    verify->add_option("--sample", sample, "Sampled P15 quadruples; 0 for an exhaustive scan");
    verify->add_option("--seed", seed, "Seed for sampling");
    verify->add_option("--inject-mu", inject, "Testing: override mu(Y,W) with VALUE before computing")->group("Testing");
    auto* jring = app.add_subcommand("jring", "Lusztig's ring J and its matrix-unit decomposition");
    jring->add_option("--n", n, "Rank")->required();
    auto* rsk_cmd = app.add_subcommand("rsk", "Robinson-Schensted tableaux of a permutation");
    rsk_cmd->add_option("--perm", perm_text, "Permutation")->required();
    rsk_cmd->add_option("--n", n, "Rank (needed for reduced words)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::string command = "cellkit";
    for (const auto& a : args) command += " " + a;
    Session session(globals, command, out, err);
    try {
        if (*kl) return check_rank(n, false, globals), cmd_kl(session, n, pair);
        if (*cells) return check_rank(n, false, globals), cmd_cells(session, n, side);
        if (*murphy) return check_rank(n, false, globals), cmd_murphy(session, n, lambda, to_c);
        if (*zelem) return check_rank(n, false, globals), cmd_zelem(session, n, w_text);
        if (*afn) return check_rank(n, true, globals), cmd_afn(session, n);
        if (*verify) return check_rank(n, true, globals), cmd_verify(session, n, props, sample, seed, inject);
        if (*jring) return check_rank(n, true, globals), cmd_jring(session, n);
        if (*rsk_cmd) return cmd_rsk(session, perm_text, n);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const StrictCacheError& e) {
        err << "cache error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace cellkit
