#include "opcyl/examples.hpp"
#include "opcyl/io.hpp"
#include "opcyl/linear.hpp"
#include "opcyl/sdr.hpp"
#include "opcyl/suspension.hpp"
#include "opcyl/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace opcyl;

namespace {

struct Ctx {
    std::string presentation = "ainf";
    bool suspended = false;
    std::string expr;
    std::string gen;
    std::string format = "text";
    std::string out;

    Presentation pres() const
    {
        std::string name = presentation;
        int cylinders = 0;
        while (name.rfind("cyl:", 0) == 0) {
            ++cylinders;
            name = name.substr(4);
        }
        Presentation p = name.size() > 5 && name.substr(name.size() - 5) == ".json"
                             ? load_presentation_file(name)
                             : build_presentation(name);
        if (suspended)
            p = suspend_presentation(p);
        for (int i = 0; i < cylinders; ++i)
            p = CylinderEngine(p).as_presentation();
        return p;
    }
};

// accept both "sigma mu_3" and "sigma:mu_3"
std::string normalize_gen(std::string s)
{
    for (char& c : s)
        if (c == ' ')
            c = ':';
    return s;
}

void emit(const Ctx& ctx, const World& w, const Element& e)
{
    std::string text;
    if (ctx.format == "json")
        text = element_to_json(w, e).dump(2);
    else if (ctx.format == "latex")
        text = element_to_latex(w, e, true);
    else if (ctx.format == "latex-expr")
        text = element_to_latex(w, e, false);
    else
        text = e.str(w);
    if (ctx.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(ctx.out);
        f << text << "\n";
    }
}

Resolver cylinder_resolver(const Presentation& p, const Presentation& ip)
{
    return [p, ip](const std::string& name) -> std::optional<int> {
        if (auto g = ip.find_gen(name))
            return g;
        return p.find_gen(name);
    };
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"canonical strong pseudo-cylinders of pseudo-cellular DG-operads"};
    app.require_subcommand(1);

    Ctx ctx;
    VerifyOptions vopt;
    std::string suite;
    std::string import_path;

    auto add_common = [&](CLI::App* cmd, bool needs_expr) {
        cmd->add_option("--presentation", ctx.presentation,
                        "ainf | lambda-ainf | ainf-d | lambda-ainf-d | assoc-der | unital-nu:m=<k> | <file>.json")
            ->capture_default_str();
        cmd->add_flag("--suspended", ctx.suspended, "apply the operadic suspension first");
        cmd->add_option("--format", ctx.format, "text | json | latex | latex-expr")->capture_default_str();
        cmd->add_option("--out", ctx.out, "write the result to a file");
        if (needs_expr)
            cmd->add_option("--expr", ctx.expr, "element expression");
    };

    CLI::App* diff = app.add_subcommand("diff", "differential of an element of the operad");
    add_common(diff, true);

    CLI::App* hom = app.add_subcommand("homotopy", "chain homotopy h of a cylinder element");
    add_common(hom, true);

    CLI::App* cyd = app.add_subcommand("cyl-diff", "cylinder differential of a generator or expression");
    add_common(cyd, true);
    cyd->add_option("--gen", ctx.gen, "cylinder generator, e.g. \"sigma mu_3\"");

    CLI::App* dbl = app.add_subcommand("double", "doubling map nu on a cylinder element (linear case)");
    add_common(dbl, true);

    CLI::App* rev = app.add_subcommand("reverse", "reversing map iota on a cylinder element (linear case)");
    add_common(rev, true);

    CLI::App* exp = app.add_subcommand("export", "parse and re-emit an element");
    add_common(exp, true);
    exp->add_option("--import", import_path, "read Element JSON from a file instead of --expr");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite,
                    "sdr | d2 | vanishing | ainf-formula | tech | conder | linear | unital-H | braces | suspension")
        ->required();
    ver->add_option("--presentation", vopt.presentation, "presentation for the d2 suite")->capture_default_str();
    ver->add_option("--max-arity", vopt.max_arity)->capture_default_str();
    ver->add_option("--max-vertices", vopt.max_vertices)->capture_default_str();
    ver->add_option("--seed", vopt.seed)->capture_default_str();
    ver->add_option("--count", vopt.count)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ver->parsed()) {
            bool all = true;
            for (const Check& c : verify_suite(suite, vopt)) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.detail.empty())
                    std::cout << " -- " << c.detail;
                std::cout << "\n";
                all = all && c.pass;
            }
            return all ? 0 : 2;
        }

        Presentation p = ctx.pres();
        if (diff->parsed()) {
            Element e = parse_element(p.world(), presentation_resolver(p), ctx.expr);
            emit(ctx, p.world(), p.differential(e));
            return 0;
        }

        CylinderEngine cyl(p);
        Presentation ip = cyl.as_presentation();
        Resolver res = cylinder_resolver(p, ip);
        if (hom->parsed()) {
            Element e = parse_element(cyl.world(), res, ctx.expr);
            emit(ctx, cyl.world(), cyl.homotopy(e));
            return 0;
        }
        if (cyd->parsed()) {
            Element e;
            if (!ctx.gen.empty()) {
                auto g = ip.find_gen(normalize_gen(ctx.gen));
                if (!g)
                    throw std::invalid_argument("unknown cylinder generator: " + ctx.gen);
                e = cyl.cyl_d(*g);
            } else if (!ctx.expr.empty()) {
                e = cyl.differential(parse_element(cyl.world(), res, ctx.expr));
            } else {
                throw std::invalid_argument("cyl-diff needs --gen or --expr");
            }
            emit(ctx, cyl.world(), e);
            return 0;
        }
        if (dbl->parsed() || rev->parsed()) {
            Element e = parse_element(cyl.world(), res, ctx.expr);
            int top = 0;
            for (const auto& [m, c] : e.terms())
                for (int32_t g : m.labels)
                    if (!cyl.world().is_base(g))
                        top = std::max(top, cyl.world().stage(g));
            if (!p.is_linear(top))
                throw std::invalid_argument("doubling/reversing maps need a linear presentation");
            if (dbl->parsed()) {
                DoubleCylinder dc(p, cyl);
                emit(ctx, cyl.world(), dc.doubling(e));
            } else {
                emit(ctx, cyl.world(), reversing(cyl, e));
            }
            return 0;
        }
        if (exp->parsed()) {
            Element e;
            if (!import_path.empty()) {
                std::ifstream f(import_path);
                if (!f)
                    throw std::invalid_argument("cannot read " + import_path);
                nlohmann::json j;
                f >> j;
                e = element_from_json(cyl.world(), res, j);
            } else {
                e = parse_element(cyl.world(), res, ctx.expr);
            }
            emit(ctx, cyl.world(), e);
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
