#include "akb/cli.hpp"

#include <functional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "akb/blocks.hpp"
#include "akb/text.hpp"

namespace akb {

namespace {

using json = nlohmann::ordered_json;

struct Inputs {
  std::string mp;
  std::string charge;
  Int e = 0;
  Int i = 0;
  Int n = 0;
  std::string core;
  Int weight = 0;
  Int guard = 0;
  bool has_guard = false;
};

ChargedMultipartition charged_input(const Inputs& in) {
  return charged(parse_multipartition(in.mp), parse_multicharge(in.charge).entries);
}

EnumerationGuard guard_of(const Inputs& in) {
  EnumerationGuard g;
  if (in.has_guard) g.override_max = in.guard;
  return g;
}

json common_fields(const ChargedMultipartition& lam, Int e) {
  return json{{"e", e},
              {"l", lam.level()},
              {"multicharge", render_multicharge(lam.charge)},
              {"multipartition", render_multipartition(lam.components)}};
}

json descriptor_fields(const BlockDescriptor& d) {
  return json{{"e", d.e},
              {"l", d.l},
              {"multicharge", render_multicharge(d.multicharge)},
              {"core", render_partition(d.core)},
              {"weight", d.weight},
              {"hub", d.hub.deltas},
              {"content", d.content.counts},
              {"n", d.n}};
}

void print_text(std::ostream& out, const json& j, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_text(out, value, name);
    } else if (value.is_array() && key == "members") {
      out << name << ": " << value.size() << "\n";
      for (const auto& m : value)
        out << "member: " << m.get<std::string>() << "\n";
    } else if (value.is_array()) {
      out << name << ":";
      for (const auto& v : value) out << " " << v.dump();
      out << "\n";
    } else if (value.is_string()) {
      out << name << ": " << value.get<std::string>() << "\n";
    } else {
      out << name << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Block combinatorics of Ariki-Koike algebras"};
  app.require_subcommand(1);

  Inputs in;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  json report;
  std::function<void()> action;

  auto add_mp = [&](CLI::App* cmd) {
    cmd->add_option("--mp", in.mp, "Multipartition, components separated by '|'")
        ->required();
    cmd->add_option("--charge", in.charge, "Multicharge, comma separated")->required();
    cmd->add_option("--e", in.e, "Quantum characteristic, >= 2")->required();
  };
  auto add_i = [&](CLI::App* cmd) {
    cmd->add_option("--i", in.i, "Residue in {0..e-1}")->required();
  };
  auto add_guard = [&](CLI::App* cmd) {
    cmd->add_option("--guard", in.guard, "Max n for exhaustive enumeration")
        ->each([&](const std::string&) { in.has_guard = true; });
  };

  CLI::App* core_cmd = app.add_subcommand("core", "e-core of a charged multipartition");
  add_mp(core_cmd);
  core_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      report = common_fields(lam, in.e);
      report["core"] = render_partition(pair_core(lam, in.e));
    };
  });

  CLI::App* weight_cmd =
      app.add_subcommand("weight", "e-weight at the given multicharge");
  add_mp(weight_cmd);
  weight_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      report = common_fields(lam, in.e);
      report["weight"] = pair_weight(lam, in.e);
    };
  });

  CLI::App* uglov_cmd =
      app.add_subcommand("uglov", "Image partition and charge under the Uglov map");
  add_mp(uglov_cmd);
  uglov_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      UglovImage img = uglov_partition(lam, in.e);
      report = common_fields(lam, in.e);
      report["partition"] = render_partition(img.partition);
      report["charge"] = img.charge;
    };
  });

  CLI::App* quot_cmd =
      app.add_subcommand("quotient", "e-quotient of a single charged partition");
  add_mp(quot_cmd);
  quot_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      if (lam.level() != 1)
        throw std::invalid_argument("quotient: expects a single component");
      EQuotient q = e_quotient(beta_set(lam.component(1), lam.charge.entry(1)), in.e);
      report = common_fields(lam, in.e);
      json comps = json::array();
      for (const BetaSet& c : q.components)
        comps.push_back(json{{"charge", c.charge}, {"shape", render_partition(c.shape)}});
      report["components"] = comps;
    };
  });

  CLI::App* hub_cmd = app.add_subcommand("hub", "Hub vector of a charged multipartition");
  add_mp(hub_cmd);
  hub_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      report = common_fields(lam, in.e);
      report["hub"] = multi_hub(lam, in.e).deltas;
    };
  });

  CLI::App* block_cmd = app.add_subcommand("block", "Block descriptor of a member");
  add_mp(block_cmd);
  block_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      BlockDescriptor d = block_of(lam, in.e);
      report = common_fields(lam, in.e);
      json fields = descriptor_fields(d);
      for (auto& [k, v] : fields.items()) report[k] = v;
    };
  });

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "Members of a block");
  enum_cmd->add_option("--n", in.n, "Total size of the members")->required();
  enum_cmd->add_option("--charge", in.charge, "Multicharge, comma separated")->required();
  enum_cmd->add_option("--e", in.e, "Quantum characteristic, >= 2")->required();
  enum_cmd->add_option("--core", in.core, "Core partition (empty, '0' or '-' for the empty one)");
  enum_cmd->add_option("--weight", in.weight, "Block weight")->required();
  add_guard(enum_cmd);
  enum_cmd->callback([&] {
    action = [&] {
      Multicharge mc = parse_multicharge(in.charge);
      Partition core = parse_partition(in.core);
      auto members = enumerate_block(in.e, mc, in.n, core, in.weight, guard_of(in));
      report = json{{"e", in.e},
                    {"l", mc.length()},
                    {"multicharge", render_multicharge(mc)},
                    {"core", render_partition(core)},
                    {"weight", in.weight},
                    {"n", in.n}};
      json list = json::array();
      for (const auto& mp : members) list.push_back(render_multipartition(mp));
      report["members"] = list;
    };
  });

  CLI::App* dot_cmd =
      app.add_subcommand("dot", "s_i dot action on a charged multipartition");
  add_mp(dot_cmd);
  add_i(dot_cmd);
  dot_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      auto res = dot_si_multipartition(lam, in.e, in.i);
      report = common_fields(lam, in.e);
      report["i"] = in.i;
      report["result"] = render_multipartition(res.components);
    };
  });

  CLI::App* wk_cmd = app.add_subcommand("wkpair", "[w:k]-pair of a block and s_i . block");
  add_mp(wk_cmd);
  add_i(wk_cmd);
  wk_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      BlockDescriptor d = block_of(lam, in.e);
      report = common_fields(lam, in.e);
      report["i"] = in.i;
      report["block"] = descriptor_fields(d);
      if (auto p = wk_pair(d, in.i))
        report["pair"] = json{{"w", p->w}, {"k", p->k}};
      else
        report["pair"] = nullptr;
      report["target"] = descriptor_fields(si_dot_block(d, in.i));
    };
  });

  CLI::App* scopes_cmd = app.add_subcommand("scopes", "Scopes equivalence checks");
  add_mp(scopes_cmd);
  add_i(scopes_cmd);
  add_guard(scopes_cmd);
  scopes_cmd->callback([&] {
    action = [&] {
      auto lam = charged_input(in);
      BlockDescriptor d = block_of(lam, in.e);
      ScopesStatus st = scopes_status(d, in.i, guard_of(in));
      report = common_fields(lam, in.e);
      report["i"] = in.i;
      report["block"] = descriptor_fields(d);
      report["theorem_sufficient"] = st.theorem_sufficient;
      if (st.direct)
        report["direct"] = *st.direct;
      else
        report["direct"] = nullptr;
    };
  });

  CLI::App* canon_cmd =
      app.add_subcommand("canonicalize", "Standard multicharge and witness");
  canon_cmd->add_option("--charge", in.charge, "Multicharge, comma separated")->required();
  canon_cmd->add_option("--e", in.e, "Quantum characteristic, >= 2")->required();
  canon_cmd->callback([&] {
    action = [&] {
      Multicharge mc = parse_multicharge(in.charge);
      CanonicalCharge can = canonicalize(mc, in.e);
      report = json{{"e", in.e},
                    {"multicharge", render_multicharge(mc)},
                    {"standard", render_multicharge(can.standard)},
                    {"sigma", can.witness.sigma_images()},
                    {"u", can.witness.translation_vector()}};
    };
  });

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("akblocks");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    action();
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (format == "json")
    out << report.dump(2) << "\n";
  else
    print_text(out, report, "");
  return 0;
}

}  // namespace akb
