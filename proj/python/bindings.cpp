#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "akb/blocks.hpp"
#include "akb/text.hpp"

namespace py = pybind11;
using namespace akb;

namespace {

EnumerationGuard guard_from(std::optional<Int> max_n) {
  EnumerationGuard g;
  if (max_n) g.override_max = *max_n;
  return g;
}

Multicharge charge_from(const std::vector<Int>& entries) {
  return Multicharge{entries};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cores, weights and blocks of Ariki-Koike algebras via the Uglov map";

  py::register_exception<GuardError>(m, "GuardError");

  py::class_<Partition>(m, "Partition")
      .def(py::init<>())
      .def(py::init<std::vector<Int>>(), py::arg("parts"))
      .def_property_readonly("parts", &Partition::parts)
      .def("size", &Partition::size)
      .def("length", &Partition::length)
      .def("part", &Partition::part, py::arg("row"))
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__len__", &Partition::length)
      .def("__hash__",
           [](const Partition& p) {
             std::size_t h = 0;
             for (Int v : p.parts()) h = h * 1000003u + static_cast<std::size_t>(v);
             return h;
           })
      .def("__repr__",
           [](const Partition& p) { return "Partition(" + render_partition(p) + ")"; });
  py::implicitly_convertible<std::vector<Int>, Partition>();

  py::class_<BetaSet>(m, "BetaSet")
      .def(py::init([](Int charge, const Partition& shape) {
             return BetaSet{charge, shape};
           }),
           py::arg("charge"), py::arg("shape") = Partition{})
      .def_readonly("charge", &BetaSet::charge)
      .def_readonly("shape", &BetaSet::shape)
      .def("element", &BetaSet::element, py::arg("a"))
      .def("contains", &BetaSet::contains, py::arg("x"))
      .def("__contains__", &BetaSet::contains)
      .def(py::self == py::self)
      .def("__repr__", [](const BetaSet& b) {
        std::ostringstream os;
        os << "BetaSet(charge=" << b.charge << ", shape=" << render_partition(b.shape)
           << ")";
        return os.str();
      });

  py::class_<EQuotient>(m, "EQuotient")
      .def_readonly("e", &EQuotient::e)
      .def_readonly("components", &EQuotient::components)
      .def(py::self == py::self);

  py::class_<Node>(m, "Node")
      .def(py::init([](Int row, Int col, Int component) {
             return Node{row, col, component};
           }),
           py::arg("row"), py::arg("col"), py::arg("component"))
      .def_readonly("row", &Node::row)
      .def_readonly("col", &Node::col)
      .def_readonly("component", &Node::component)
      .def(py::self == py::self)
      .def("__repr__", [](const Node& n) {
        std::ostringstream os;
        os << "Node(" << n.row << ", " << n.col << ", " << n.component << ")";
        return os.str();
      });

  py::class_<ChargedMultipartition>(m, "ChargedMultipartition")
      .def(py::init([](std::vector<Partition> components, std::vector<Int> charge) {
             return charged(std::move(components), std::move(charge));
           }),
           py::arg("components"), py::arg("charge"))
      .def_property_readonly(
          "components",
          [](const ChargedMultipartition& lam) { return lam.components; })
      .def_property_readonly(
          "charge", [](const ChargedMultipartition& lam) { return lam.charge.entries; })
      .def("level", &ChargedMultipartition::level)
      .def("size", &ChargedMultipartition::size)
      .def("contains", &ChargedMultipartition::contains, py::arg("node"))
      .def(py::self == py::self)
      .def("__repr__", [](const ChargedMultipartition& lam) {
        return "ChargedMultipartition(" + render_multipartition(lam.components) + "; " +
               render_multicharge(lam.charge) + ")";
      });

  py::class_<UglovImage>(m, "UglovImage")
      .def_readonly("partition", &UglovImage::partition)
      .def_readonly("charge", &UglovImage::charge)
      .def(py::self == py::self)
      .def("__repr__", [](const UglovImage& u) {
        std::ostringstream os;
        os << "UglovImage(" << render_partition(u.partition) << ", charge=" << u.charge
           << ")";
        return os.str();
      });

  py::enum_<DomainClass>(m, "DomainClass")
      .value("IN_A", DomainClass::InA)
      .value("IN_ABAR_ONLY", DomainClass::InAbarOnly)
      .value("OUTSIDE", DomainClass::Outside);

  py::class_<WeylElement>(m, "WeylElement")
      .def(py::init<std::vector<Int>, std::vector<Int>>(), py::arg("sigma"),
           py::arg("u"))
      .def_static("identity", &WeylElement::identity, py::arg("l"))
      .def_static("transposition", &WeylElement::transposition, py::arg("l"),
                  py::arg("k"))
      .def_static("affine_s0", &WeylElement::affine_s0, py::arg("l"))
      .def_static("rho_shift", &WeylElement::rho_shift, py::arg("l"))
      .def_static("translation", &WeylElement::translation, py::arg("u"))
      .def_property_readonly("sigma", &WeylElement::sigma_images)
      .def_property_readonly("u", &WeylElement::translation_vector)
      .def("level", &WeylElement::level)
      .def("then", &WeylElement::then, py::arg("w"))
      .def("inverse", &WeylElement::inverse)
      .def("power", &WeylElement::power, py::arg("k"))
      .def(py::self == py::self)
      .def("__repr__", [](const WeylElement& w) {
        std::ostringstream os;
        os << "WeylElement(sigma=[";
        for (Int a = 1; a <= w.level(); ++a) os << (a > 1 ? "," : "") << w.sigma(a);
        os << "], u=[";
        for (std::size_t i = 0; i < w.translation_vector().size(); ++i)
          os << (i ? "," : "") << w.translation_vector()[i];
        os << "])";
        return os.str();
      });

  py::class_<BlockDescriptor>(m, "BlockDescriptor")
      .def_readonly("e", &BlockDescriptor::e)
      .def_readonly("l", &BlockDescriptor::l)
      .def_property_readonly(
          "multicharge", [](const BlockDescriptor& d) { return d.multicharge.entries; })
      .def_readonly("core", &BlockDescriptor::core)
      .def_readonly("weight", &BlockDescriptor::weight)
      .def_property_readonly("hub",
                             [](const BlockDescriptor& d) { return d.hub.deltas; })
      .def_property_readonly("content",
                             [](const BlockDescriptor& d) { return d.content.counts; })
      .def_readonly("n", &BlockDescriptor::n)
      .def(py::self == py::self)
      .def("__repr__", [](const BlockDescriptor& d) {
        std::ostringstream os;
        os << "BlockDescriptor(e=" << d.e << ", l=" << d.l << ", multicharge="
           << render_multicharge(d.multicharge) << ", core=" << render_partition(d.core)
           << ", weight=" << d.weight << ", n=" << d.n << ")";
        return os.str();
      });

  py::class_<ScopesStatus>(m, "ScopesStatus")
      .def_readonly("theorem_sufficient", &ScopesStatus::theorem_sufficient)
      .def_readonly("direct", &ScopesStatus::direct);

  // single abacus
  m.def("beta_set", &beta_set, py::arg("shape"), py::arg("charge"));
  m.def("members_above", &members_above, py::arg("b"), py::arg("cutoff"));
  m.def("shift", &shift, py::arg("b"), py::arg("k"));
  m.def("e_quotient", &e_quotient, py::arg("b"), py::arg("e"));
  m.def("e_quotient_inverse", &e_quotient_inverse, py::arg("q"));
  m.def("e_core", &e_core, py::arg("b"), py::arg("e"));
  m.def("e_weight", &e_weight, py::arg("b"), py::arg("e"));
  m.def("delta", &delta, py::arg("b"), py::arg("e"), py::arg("i"));
  m.def(
      "hub", [](const BetaSet& b, Int e) { return hub(b, e).deltas; }, py::arg("b"),
      py::arg("e"));

  // multipartitions
  m.def(
      "residue",
      [](const Node& node, const std::vector<Int>& t, Int e) {
        return residue(node, charge_from(t), e);
      },
      py::arg("node"), py::arg("charge"), py::arg("e"));
  m.def(
      "residue_content",
      [](const ChargedMultipartition& lam, Int e) {
        return residue_content(lam, e).counts;
      },
      py::arg("lam"), py::arg("e"));
  m.def(
      "boundary_nodes",
      [](const ChargedMultipartition& lam, Int e, Int i) {
        BoundaryNodes bn = boundary_nodes(lam, e, i);
        return py::make_tuple(bn.removable, bn.addable);
      },
      py::arg("lam"), py::arg("e"), py::arg("i"));
  m.def(
      "multi_hub",
      [](const ChargedMultipartition& lam, Int e) { return multi_hub(lam, e).deltas; },
      py::arg("lam"), py::arg("e"));

  // Uglov map
  m.def("upsilon", &upsilon, py::arg("j"), py::arg("x"), py::arg("e"), py::arg("l"));
  m.def(
      "uglov_map",
      [](const std::vector<BetaSet>& bs, Int e) { return uglov_map(bs, e); },
      py::arg("bs"), py::arg("e"));
  m.def("uglov_inverse", &uglov_inverse, py::arg("b"), py::arg("e"), py::arg("l"));
  m.def("uglov_partition", &uglov_partition, py::arg("lam"), py::arg("e"));
  m.def("pair_core", &pair_core, py::arg("lam"), py::arg("e"));
  m.def("pair_weight", &pair_weight, py::arg("lam"), py::arg("e"));

  // Weyl group actions
  m.def(
      "act_right",
      [](const ChargedMultipartition& lam, const WeylElement& w, Int e) {
        return act_right(lam, w, e);
      },
      py::arg("lam"), py::arg("w"), py::arg("e"));
  m.def(
      "act_right_charge",
      [](const std::vector<Int>& t, const WeylElement& w, Int e) {
        return act_right(charge_from(t), w, e).entries;
      },
      py::arg("charge"), py::arg("w"), py::arg("e"));
  m.def(
      "classify_charge",
      [](const std::vector<Int>& t, Int e) { return classify_charge(charge_from(t), e); },
      py::arg("charge"), py::arg("e"));
  m.def(
      "canonicalize",
      [](const std::vector<Int>& t, Int e) {
        CanonicalCharge can = canonicalize(charge_from(t), e);
        return py::make_tuple(can.standard.entries, can.witness);
      },
      py::arg("charge"), py::arg("e"));
  m.def("dot_si_beta", &dot_si_beta, py::arg("b"), py::arg("e"), py::arg("i"),
        py::arg("k") = 1);
  m.def("dot_ej_beta", &dot_ej_beta, py::arg("b"), py::arg("e"), py::arg("j"),
        py::arg("k"));
  m.def("dot_si_multipartition", &dot_si_multipartition, py::arg("lam"), py::arg("e"),
        py::arg("i"));

  // blocks
  m.def("block_of", &block_of, py::arg("lam"), py::arg("e"));
  m.def("same_block", &same_block, py::arg("a"), py::arg("b"), py::arg("e"));
  m.def(
      "enumerate_block",
      [](const BlockDescriptor& desc, std::optional<Int> guard) {
        return enumerate_block(desc, guard_from(guard));
      },
      py::arg("desc"), py::arg("guard") = std::nullopt);
  m.def(
      "enumerate_block_by",
      [](Int e, const std::vector<Int>& charge, Int n, const Partition& core, Int weight,
         std::optional<Int> guard) {
        return enumerate_block(e, charge_from(charge), n, core, weight,
                               guard_from(guard));
      },
      py::arg("e"), py::arg("charge"), py::arg("n"), py::arg("core"), py::arg("weight"),
      py::arg("guard") = std::nullopt);
  m.def("si_dot_block", &si_dot_block, py::arg("desc"), py::arg("i"));
  m.def(
      "wk_pair",
      [](const BlockDescriptor& desc, Int i) -> std::optional<std::pair<Int, Int>> {
        if (auto p = wk_pair(desc, i)) return std::make_pair(p->w, p->k);
        return std::nullopt;
      },
      py::arg("desc"), py::arg("i"));
  m.def(
      "scopes_status",
      [](const BlockDescriptor& desc, Int i, std::optional<Int> guard) {
        return scopes_status(desc, i, guard_from(guard));
      },
      py::arg("desc"), py::arg("i"), py::arg("guard") = std::nullopt);
  m.def("multipartitions_of", &multipartitions_of, py::arg("n"), py::arg("l"));
  m.def("partitions_of", &partitions_of, py::arg("n"));

  // text forms used by the CLI
  m.def("parse_partition", &parse_partition, py::arg("text"));
  m.def("parse_multipartition", &parse_multipartition, py::arg("text"));
  m.def(
      "parse_multicharge",
      [](std::string_view text) { return parse_multicharge(text).entries; },
      py::arg("text"));
  m.def("render_partition", &render_partition, py::arg("p"));
  m.def(
      "render_multipartition",
      [](const std::vector<Partition>& mp) { return render_multipartition(mp); },
      py::arg("mp"));
  m.def(
      "render_multicharge",
      [](const std::vector<Int>& t) { return render_multicharge(charge_from(t)); },
      py::arg("charge"));
}
