#include "opcyl/examples.hpp"
#include "opcyl/io.hpp"
#include "opcyl/linear.hpp"
#include "opcyl/sdr.hpp"
#include "opcyl/suspension.hpp"
#include "opcyl/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace opcyl;

namespace {

// an element together with the world it lives in, so it can print itself
struct PyElement {
    WorldPtr world;
    Element e;

    std::string str() const { return e.str(*world); }
    std::string latex(bool trees) const { return element_to_latex(*world, e, trees); }
    std::string json() const { return element_to_json(*world, e).dump(); }
};

PyElement wrap(WorldPtr w, Element e) { return PyElement{std::move(w), std::move(e)}; }

struct PyPresentation {
    Presentation pres;
    std::shared_ptr<CylinderEngine> cyl;
    Presentation cyl_pres;

    explicit PyPresentation(Presentation p) : pres(std::move(p))
    {
        cyl = std::make_shared<CylinderEngine>(pres);
        cyl_pres = cyl->as_presentation();
    }

    Resolver resolver() const
    {
        Presentation p = pres, ip = cyl_pres;
        return [p, ip](const std::string& name) -> std::optional<int> {
            if (auto g = ip.find_gen(name))
                return g;
            return p.find_gen(name);
        };
    }

    PyElement parse(const std::string& s) const
    {
        return wrap(pres.world_ptr(), parse_element(pres.world(), resolver(), s));
    }
    PyElement diff(const std::string& s) const
    {
        return wrap(pres.world_ptr(), pres.differential(parse_element(pres.world(), presentation_resolver(pres), s)));
    }
    PyElement boundary(const std::string& gen) const
    {
        auto g = pres.find_gen(gen);
        if (!g)
            throw std::invalid_argument("unknown generator: " + gen);
        return wrap(pres.world_ptr(), pres.boundary(*g));
    }
    PyElement homotopy(const std::string& s) const
    {
        return wrap(pres.world_ptr(), cyl->homotopy(parse_element(pres.world(), resolver(), s)));
    }
    PyElement cyl_diff(const std::string& s) const
    {
        std::string n = s;
        for (char& c : n)
            if (c == ' ')
                c = ':';
        if (auto g = cyl_pres.find_gen(n))
            return wrap(pres.world_ptr(), cyl->cyl_d(*g));
        return wrap(pres.world_ptr(), cyl->differential(parse_element(pres.world(), resolver(), s)));
    }
    bool check_d_squared(int max_stage) const { return pres.check_d_squared(max_stage).ok; }
    bool cylinder_d_squared(int max_stage) const { return cyl_pres.check_d_squared(max_stage).ok; }
    bool is_linear(int max_stage) const { return pres.is_linear(max_stage); }
    std::vector<std::string> generators(int max_stage) const
    {
        std::vector<std::string> out;
        for (int g : pres.gens_up_to_stage(max_stage))
            out.push_back(pres.world().rec(g).name);
        return out;
    }
};

} // namespace

PYBIND11_MODULE(_opcyl, m)
{
    m.doc() = "exact symbolic cylinders of pseudo-cellular DG-operads";

    py::class_<PyElement>(m, "Element")
        .def("__str__", &PyElement::str)
        .def("__repr__", [](const PyElement& e) { return "<Element " + e.str() + ">"; })
        .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.e == b.e; })
        .def("__add__", [](const PyElement& a, const PyElement& b) { return wrap(a.world, a.e + b.e); })
        .def("__sub__", [](const PyElement& a, const PyElement& b) { return wrap(a.world, a.e - b.e); })
        .def("__neg__", [](const PyElement& a) { return wrap(a.world, -a.e); })
        .def("__mul__", [](const PyElement& a, long long c) { return wrap(a.world, a.e.scaled(BigInt(c))); })
        .def("__rmul__", [](const PyElement& a, long long c) { return wrap(a.world, a.e.scaled(BigInt(c))); })
        .def("is_zero", [](const PyElement& a) { return a.e.is_zero(); })
        .def_property_readonly("arity", [](const PyElement& a) { return a.e.arity(); })
        .def_property_readonly("degree", [](const PyElement& a) { return a.e.degree(); })
        .def("terms", [](const PyElement& a) { return a.e.term_count(); })
        .def("compose", [](const PyElement& a, int i, const PyElement& b) {
            return wrap(a.world, compose_at(*a.world, a.e, i, b.e));
        })
        .def("brace", [](const PyElement& a, const std::vector<PyElement>& args) {
            std::vector<Element> es;
            for (const PyElement& x : args)
                es.push_back(x.e);
            return wrap(a.world, brace(*a.world, a.e, es));
        })
        .def("latex", &PyElement::latex, py::arg("trees") = false)
        .def("json", &PyElement::json);

    py::class_<PyPresentation>(m, "Presentation")
        .def(py::init([](const std::string& name, bool suspended) {
                 Presentation p = build_presentation(name);
                 if (suspended)
                     p = suspend_presentation(p);
                 return PyPresentation(std::move(p));
             }),
             py::arg("name"), py::arg("suspended") = false)
        .def_property_readonly("name", [](const PyPresentation& p) { return p.pres.name(); })
        .def("parse", &PyPresentation::parse)
        .def("diff", &PyPresentation::diff)
        .def("boundary", &PyPresentation::boundary)
        .def("homotopy", &PyPresentation::homotopy)
        .def("cyl_diff", &PyPresentation::cyl_diff)
        .def("check_d_squared", &PyPresentation::check_d_squared, py::arg("max_stage"))
        .def("cylinder_d_squared", &PyPresentation::cylinder_d_squared, py::arg("max_stage"))
        .def("is_linear", &PyPresentation::is_linear, py::arg("max_stage"))
        .def("generators", &PyPresentation::generators, py::arg("max_stage"));

    m.def(
        "verify",
        [](const std::string& suite, int max_arity, int max_vertices, uint64_t seed, int count,
           const std::string& presentation) {
            VerifyOptions opt;
            opt.max_arity = max_arity;
            opt.max_vertices = max_vertices;
            opt.seed = seed;
            opt.count = count;
            opt.presentation = presentation;
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const Check& c : verify_suite(suite, opt))
                out.emplace_back(c.name, c.pass, c.detail);
            return out;
        },
        py::arg("suite"), py::arg("max_arity") = 5, py::arg("max_vertices") = 3,
        py::arg("seed") = 1, py::arg("count") = 1000, py::arg("presentation") = "ainf");

    m.attr("presentations") =
        std::vector<std::string>{"ainf", "lambda-ainf", "ainf-d", "lambda-ainf-d", "assoc-der",
                                 "unital-nu:m=1", "unital-nu:m=2"};
}
