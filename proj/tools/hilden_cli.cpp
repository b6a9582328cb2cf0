#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hilden/cli.hpp"

int main(int argc, char** argv) {
    using hilden::cli::JobSpec;
    using hilden::cli::Subcommand;

    CLI::App app{"hilden: mapping classes fixing a plat of arcs, their action tables,\n"
                 "relations, motion-group images, and plat-closure invariants"};
    app.require_subcommand(1);

    JobSpec spec;
    bool json_flag = false;
    bool text_flag = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json_flag, "emit one JSON object instead of text");
        cmd->add_flag("--text", text_flag, "force text output (overrides HILDEN_OUTPUT)");
    };
    auto add_config = [&](CLI::App* cmd, bool arcs_required) -> CLI::Option* {
        cmd->add_option("--genus", spec.genus, "surface genus g (default 0)");
        CLI::Option* arcs = cmd->add_option("--arcs", spec.arcs, "number of arcs n");
        if (arcs_required) arcs->required();
        return arcs;
    };

    auto* eval = app.add_subcommand("eval", "evaluate a generator word to its action table");
    add_config(eval, true);
    eval->add_option("--word", spec.word, "generator word, e.g. \"iota[1] lam[1]^-1\"")
        ->required();
    add_output(eval);
    eval->callback([&] { spec.subcommand = Subcommand::Eval; });

    auto* relations = app.add_subcommand("relations", "run the full relation suite");
    add_config(relations, true);
    add_output(relations);
    relations->callback([&] { spec.subcommand = Subcommand::Relations; });

    auto* perm = app.add_subcommand("perm", "puncture permutation and signed decomposition");
    add_config(perm, true);
    perm->add_option("--word", spec.word, "generator word")->required();
    add_output(perm);
    perm->callback([&] { spec.subcommand = Subcommand::Perm; });

    auto* member =
        app.add_subcommand("member", "necessary-condition screen for membership");
    add_config(member, true);
    member->add_option("--word", spec.word, "generator word")->required();
    add_output(member);
    member->callback([&] { spec.subcommand = Subcommand::Member; });

    auto* motion = app.add_subcommand("motion", "image under the motion-group map");
    motion->add_option("--arcs", spec.arcs, "number of unlink components n")->required();
    motion->add_option("--word", spec.word, "word in iota/lam/sik/s factors")->required();
    motion->add_option("--probe", spec.probe, "probe the order up to this bound");
    add_output(motion);
    motion->callback([&] { spec.subcommand = Subcommand::Motion; });

    auto* plat = app.add_subcommand("plat", "plat-closure presentation and homology");
    CLI::Option* plat_arcs = add_config(plat, false);
    plat->add_option("--psi", spec.psi, "handle-twist word (tu/tv factors)");
    plat->add_option("--sigma", spec.sigma, "Hilden-generator word");
    CLI::Option* batch = plat->add_option("--batch", spec.batch_file,
                                          "file with one job per line: G N ; psi ; sigma");
    add_output(plat);
    plat->callback([&] {
        spec.subcommand = Subcommand::Plat;
        if (batch->count() == 0 && plat_arcs->count() == 0)
            throw CLI::RequiredError("--arcs (or --batch)");
    });

    auto* coset = app.add_subcommand("coset", "compare sigma with sigma*epsilon");
    add_config(coset, true);
    coset->add_option("--psi", spec.psi, "handle-twist word (tu/tv factors)");
    coset->add_option("--sigma", spec.sigma, "Hilden-generator word");
    coset->add_option("--epsilon", spec.epsilon, "Hilden-generator word");
    add_output(coset);
    coset->callback([&] { spec.subcommand = Subcommand::Coset; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (json_flag)
        spec.json = true;
    else if (text_flag)
        spec.json = false;
    else
        spec.json = hilden::cli::default_json_output();

    return hilden::cli::run(spec, std::cout);
}
