#include "hilden/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hilden/catalog.hpp"
#include "hilden/errors.hpp"
#include "hilden/motion.hpp"
#include "hilden/plat.hpp"
#include "hilden/projections.hpp"
#include "hilden/surface.hpp"

namespace hilden::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Report {
    int status = kOk;
    ordered_json result;            // null until a handler fills it
    std::vector<std::string> notes; // diagnostics messages
    std::string text;               // human-readable body
};

// ---------------------------------------------------------------------------
// Serialization helpers
// ---------------------------------------------------------------------------

std::string word_or_1(const std::string& literal) { return literal.empty() ? "1" : literal; }

std::vector<int> perm_array(const PuncturePermutation& p) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(p.size()));
    for (int k = 1; k <= p.size(); ++k) v.push_back(p.map1(k));
    return v;
}

ordered_json signed_json(const SignedPermutation& s) {
    ordered_json j;
    std::vector<int> perm;
    for (int x : s.perm) perm.push_back(x + 1);
    j["perm"] = perm;
    j["signs"] = s.signs;
    return j;
}

ordered_json element_json(const MappingClassElement& m) {
    ordered_json j;
    j["config"] = {{"genus", m.config->genus()}, {"arcs", m.config->arcs()}};
    ordered_json images = ordered_json::object();
    const AlphabetPtr& alph = m.config->alphabet();
    for (int s = 0; s < alph->size(); ++s)
        images[alph->name(s)] = to_string(m.action.forward().image(s));
    j["images"] = images;
    j["permutation"] = perm_array(m.perm);
    j["provenance"] = to_string(m.provenance);
    return j;
}

std::string element_text(const MappingClassElement& m) {
    std::ostringstream os;
    os << "config: genus " << m.config->genus() << ", arcs " << m.config->arcs() << "\n";
    const AlphabetPtr& alph = m.config->alphabet();
    for (int s = 0; s < alph->size(); ++s)
        os << "  " << alph->name(s) << " -> "
           << word_or_1(to_string(m.action.forward().image(s))) << "\n";
    os << "perm: " << m.perm.one_line() << "\n";
    os << "provenance: " << word_or_1(to_string(m.provenance)) << "\n";
    return os.str();
}

ordered_json presentation_json(const GroupPresentation& p) {
    ordered_json j;
    std::vector<std::string> gens;
    for (int s = 0; s < p.generator_count(); ++s) gens.push_back(p.generators->name(s));
    j["generators"] = gens;
    std::vector<std::string> rels;
    for (const FreeWord& r : p.relators) rels.push_back(to_string(r));
    j["relators"] = rels;
    return j;
}

void presentation_text(std::ostream& os, const GroupPresentation& p) {
    os << "  generators:";
    for (int s = 0; s < p.generator_count(); ++s) os << " " << p.generators->name(s);
    if (p.generator_count() == 0) os << " (none)";
    os << "\n  relators:";
    if (p.relators.empty()) os << " (none)";
    os << "\n";
    for (const FreeWord& r : p.relators) os << "    " << word_or_1(to_string(r)) << "\n";
}

ordered_json group_json(const AbelianGroup& g) {
    ordered_json j;
    j["free_rank"] = g.free_rank;
    std::vector<std::string> torsion;
    for (const BigInt& d : g.torsion) torsion.push_back(d.str());
    j["torsion"] = torsion;
    j["text"] = g.to_text();
    return j;
}

ordered_json inputs_echo(const JobSpec& job) {
    ordered_json echo;
    echo["subcommand"] = subcommand_token(job.subcommand);
    echo["genus"] = job.genus;
    echo["arcs"] = job.arcs;
    switch (job.subcommand) {
    case Subcommand::Eval:
    case Subcommand::Perm:
    case Subcommand::Member:
        echo["word"] = job.word;
        break;
    case Subcommand::Motion:
        echo["word"] = job.word;
        if (job.probe > 0) echo["probe"] = job.probe;
        break;
    case Subcommand::Relations:
        break;
    case Subcommand::Plat:
        if (!job.batch_file.empty()) {
            echo["batch"] = job.batch_file;
        } else {
            echo["psi"] = job.psi;
            echo["sigma"] = job.sigma;
        }
        break;
    case Subcommand::Coset:
        echo["psi"] = job.psi;
        echo["sigma"] = job.sigma;
        echo["epsilon"] = job.epsilon;
        break;
    }
    return echo;
}

// ---------------------------------------------------------------------------
// Subcommand handlers
// ---------------------------------------------------------------------------

void run_eval(const JobSpec& job, Report& rep) {
    SurfaceConfigPtr config = make_config(job.genus, job.arcs);
    MappingClassElement m = evaluate(config, parse_generator_word(job.word));
    rep.result = element_json(m);
    rep.text = element_text(m);
    rep.notes.push_back("validated");
}

void run_relations(const JobSpec& job, Report& rep) {
    SurfaceConfigPtr config = make_config(job.genus, job.arcs);
    RelationReport r = relation_suite(config);
    ordered_json instances = ordered_json::array();
    std::ostringstream os;
    for (const RelationInstance& inst : r.instances) {
        instances.push_back(ordered_json{
            {"relation", inst.relation}, {"detail", inst.detail}, {"pass", inst.pass}});
        os << "[" << (inst.pass ? "pass" : "FAIL") << "] " << inst.relation << "  "
           << inst.detail << "\n";
        if (!inst.pass) rep.notes.push_back(inst.relation + " failed: " + inst.detail);
    }
    os << "relation suite: " << r.instances.size() << " instances, " << r.failures()
       << " failures\n";
    rep.result["instances"] = instances;
    rep.result["all_pass"] = r.all_pass;
    rep.result["total"] = r.instances.size();
    rep.result["failures"] = r.failures();
    rep.text = os.str();
    rep.status = r.all_pass ? kOk : kCheckFailed;
}

void run_perm(const JobSpec& job, Report& rep) {
    SurfaceConfigPtr config = make_config(job.genus, job.arcs);
    MappingClassElement m = evaluate(config, parse_generator_word(job.word));
    PuncturePermutation p = puncture_perm(m);
    std::optional<SignedPermutation> sd = signed_decompose(p, job.arcs);
    rep.result["permutation"] = perm_array(p);
    rep.result["signed"] = sd ? signed_json(*sd) : ordered_json(nullptr);
    std::ostringstream os;
    os << "perm: " << p.one_line() << "\n";
    if (sd)
        os << "signed: " << sd->to_text() << "\n";
    else
        os << "signed: none (some arc pair is split)\n";
    rep.text = os.str();
}

void run_member(const JobSpec& job, Report& rep) {
    SurfaceConfigPtr config = make_config(job.genus, job.arcs);
    MappingClassElement m = evaluate(config, parse_generator_word(job.word));
    const bool pure = is_pure(m);
    const bool kernel = kernel_omega_necessary(m);
    std::optional<SignedPermutation> sd = signed_decompose(puncture_perm(m), job.arcs);
    const bool pass = kernel && sd.has_value();
    rep.result["is_pure"] = pure;
    rep.result["kernel_omega_necessary"] = kernel;
    rep.result["signed_decomposable"] = sd.has_value();
    rep.result["signed"] = sd ? signed_json(*sd) : ordered_json(nullptr);
    if (!kernel) rep.notes.push_back("element acts nontrivially on handle homology");
    if (!sd) rep.notes.push_back("puncture permutation does not respect the arc pairing");
    std::ostringstream os;
    os << "is_pure: " << (pure ? "yes" : "no") << "\n";
    os << "kernel_omega_necessary: " << (kernel ? "yes" : "no") << "\n";
    os << "signed_decomposable: " << (sd ? "yes" : "no") << "\n";
    os << "membership screen: " << (pass ? "PASS" : "FAIL") << "\n";
    rep.text = os.str();
    rep.status = pass ? kOk : kCheckFailed;
}

void run_motion(const JobSpec& job, Report& rep) {
    MotionAutomorphism a = hilden_map(parse_generator_word(job.word), job.arcs);
    ordered_json table = ordered_json::object();
    const AlphabetPtr& alph = a.aut.alphabet();
    std::ostringstream os;
    for (int s = 0; s < alph->size(); ++s) {
        std::string img = to_string(a.aut.forward().image(s));
        table[alph->name(s)] = img;
        os << "  " << alph->name(s) << " -> " << word_or_1(img) << "\n";
    }
    const bool ident = motion_is_identity(a);
    rep.result["table"] = table;
    rep.result["is_identity"] = ident;
    os << "identity: " << (ident ? "yes" : "no") << "\n";
    if (job.probe > 0) {
        std::optional<int> order = order_probe(a, job.probe);
        rep.result["order"] = order ? ordered_json(*order) : ordered_json(nullptr);
        if (order)
            os << "order: " << *order << "\n";
        else
            os << "order: none up to " << job.probe << "\n";
    }
    rep.text = os.str();
}

struct PlatOutcome {
    GroupPresentation raw;
    GroupPresentation simplified;
    AbelianGroup h1;
};

PlatOutcome run_plat_job(int genus, int arcs, const std::string& psi_text,
                         const std::string& sigma_text) {
    SurfaceConfigPtr config = plat_config(genus, arcs);
    GeneratorWord psi = parse_generator_word(psi_text);
    GeneratorWord sigma = parse_generator_word(sigma_text);
    GroupPresentation raw = plat_presentation(config, psi, sigma);
    PlatOutcome o{raw, tietze_simplify(raw), abelianization(raw)};
    return o;
}

ordered_json plat_json(const PlatOutcome& o) {
    ordered_json j;
    j["presentation"] = presentation_json(o.raw);
    j["simplified"] = presentation_json(o.simplified);
    j["h1"] = group_json(o.h1);
    return j;
}

void plat_text(std::ostream& os, const PlatOutcome& o) {
    os << "presentation (raw):\n";
    presentation_text(os, o.raw);
    os << "presentation (simplified):\n";
    presentation_text(os, o.simplified);
    os << "H1: " << o.h1.to_text() << "\n";
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

void run_plat_batch(const JobSpec& job, Report& rep) {
    std::ifstream in(job.batch_file);
    if (!in) throw config_error("cannot open batch file '" + job.batch_file + "'");
    ordered_json jobs = ordered_json::array();
    std::ostringstream os;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        // Grammar: "G N ; psi ; sigma" (words may be empty).
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || body[i] == ';') {
                parts.push_back(trim(body.substr(start, i - start)));
                start = i + 1;
            }
        }
        if (parts.size() != 3)
            throw parse_error("batch line " + std::to_string(lineno) +
                                  ": expected 'G N ; psi ; sigma'",
                              0);
        int g = 0, n = 0;
        std::istringstream head(parts[0]);
        std::string extra;
        if (!(head >> g >> n) || (head >> extra))
            throw parse_error("batch line " + std::to_string(lineno) +
                                  ": header must be two integers 'G N'",
                              0);
        try {
            PlatOutcome o = run_plat_job(g, n, parts[1], parts[2]);
            ordered_json entry;
            entry["line"] = lineno;
            entry["genus"] = g;
            entry["arcs"] = n;
            entry["psi"] = parts[1];
            entry["sigma"] = parts[2];
            entry["result"] = plat_json(o);
            jobs.push_back(entry);
            os << "-- line " << lineno << ": genus " << g << " arcs " << n << " ; psi \""
               << parts[1] << "\" ; sigma \"" << parts[2] << "\"\n";
            plat_text(os, o);
        } catch (const error& e) {
            throw parse_error("batch line " + std::to_string(lineno) + ": " + e.what(), 0);
        }
    }
    rep.result["jobs"] = jobs;
    rep.text = os.str();
}

void run_plat(const JobSpec& job, Report& rep) {
    if (!job.batch_file.empty()) {
        run_plat_batch(job, rep);
        return;
    }
    PlatOutcome o = run_plat_job(job.genus, job.arcs, job.psi, job.sigma);
    rep.result = plat_json(o);
    std::ostringstream os;
    plat_text(os, o);
    rep.text = os.str();
}

void run_coset(const JobSpec& job, Report& rep) {
    SurfaceConfigPtr config = plat_config(job.genus, job.arcs);
    CosetReport r = coset_equivalence_check(config, parse_generator_word(job.psi),
                                            parse_generator_word(job.sigma),
                                            parse_generator_word(job.epsilon));
    rep.result["h1_sigma"] = group_json(r.h1_sigma);
    rep.result["h1_sigma_epsilon"] = group_json(r.h1_sigma_epsilon);
    rep.result["h1_equal"] = r.h1_equal;
    rep.result["simplified_sigma"] =
        ordered_json{{"generators", r.simplified_sigma.generator_count()},
                     {"relators", r.simplified_sigma.relator_count()}};
    rep.result["simplified_sigma_epsilon"] =
        ordered_json{{"generators", r.simplified_sigma_epsilon.generator_count()},
                     {"relators", r.simplified_sigma_epsilon.relator_count()}};
    if (!r.h1_equal) rep.notes.push_back("H1 differs between sigma and sigma*epsilon");
    std::ostringstream os;
    os << "H1(sigma): " << r.h1_sigma.to_text() << "\n";
    os << "H1(sigma epsilon): " << r.h1_sigma_epsilon.to_text() << "\n";
    os << "simplified(sigma): " << r.simplified_sigma.generator_count() << " generators, "
       << r.simplified_sigma.relator_count() << " relators\n";
    os << "simplified(sigma epsilon): " << r.simplified_sigma_epsilon.generator_count()
       << " generators, " << r.simplified_sigma_epsilon.relator_count() << " relators\n";
    os << "coset H1 check: " << (r.h1_equal ? "PASS" : "FAIL") << "\n";
    rep.text = os.str();
    rep.status = r.h1_equal ? kOk : kCheckFailed;
}

void emit(const JobSpec& job, const Report& rep, std::ostream& out) {
    if (job.json) {
        ordered_json doc;
        doc["inputs"] = inputs_echo(job);
        doc["result"] = rep.result;
        doc["diagnostics"] =
            ordered_json{{"pass", rep.status == kOk}, {"messages", rep.notes}};
        out << doc.dump(2) << "\n";
    } else {
        out << rep.text;
        for (const std::string& msg : rep.notes)
            out << (rep.status == kOk ? "note: " : "error: ") << msg << "\n";
    }
}

} // namespace

std::string subcommand_token(Subcommand sub) {
    switch (sub) {
    case Subcommand::Eval: return "eval";
    case Subcommand::Relations: return "relations";
    case Subcommand::Perm: return "perm";
    case Subcommand::Member: return "member";
    case Subcommand::Motion: return "motion";
    case Subcommand::Plat: return "plat";
    case Subcommand::Coset: return "coset";
    }
    return "?";
}

int run(const JobSpec& job, std::ostream& out) {
    Report rep;
    try {
        switch (job.subcommand) {
        case Subcommand::Eval: run_eval(job, rep); break;
        case Subcommand::Relations: run_relations(job, rep); break;
        case Subcommand::Perm: run_perm(job, rep); break;
        case Subcommand::Member: run_member(job, rep); break;
        case Subcommand::Motion: run_motion(job, rep); break;
        case Subcommand::Plat: run_plat(job, rep); break;
        case Subcommand::Coset: run_coset(job, rep); break;
        }
    } catch (const automorphism_error& e) {
        rep = Report{};
        rep.status = kCheckFailed;
        rep.notes.push_back(e.what());
    } catch (const error& e) {
        rep = Report{};
        rep.status = kUsage;
        rep.notes.push_back(e.what());
    }
    emit(job, rep, out);
    return rep.status;
}

bool default_json_output() {
    const char* v = std::getenv("HILDEN_OUTPUT");
    if (!v) return false;
    std::string s(v);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s == "json";
}

} // namespace hilden::cli
