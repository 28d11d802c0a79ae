#include "owlkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "owlkit/ebr.hpp"
#include "owlkit/functional.hpp"
#include "owlkit/reasoner.hpp"
#include "owlkit/sparql.hpp"
#include "owlkit/syntax.hpp"
#include "owlkit/textgen.hpp"

namespace owlkit::cli {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One IRI per line, sorted.
template <class Named>
void print_sorted(std::ostream& out, const std::vector<Named>& items) {
  std::vector<std::string> iris;
  for (const auto& x : items) iris.push_back(x.iri.str());
  std::sort(iris.begin(), iris.end());
  for (const auto& s : iris) out << s << '\n';
}

ClassExpression parse_expression(const std::string& text,
                                 const std::string& syntax,
                                 const PrefixContext& ctx) {
  return syntax == "dl" ? parse_dl(text, ctx) : parse_manchester(text, ctx);
}

// Shared text context flags of render and swrl-parse.
struct ContextFlags {
  std::vector<std::string> prefixes;
  std::string default_ns;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--prefix", prefixes, "Prefix binding name=namespace");
    cmd->add_option("--default-ns", default_ns,
                    "Namespace for bare identifiers");
  }

  PrefixContext context() const {
    PrefixContext ctx;
    for (const auto& binding : prefixes) {
      const auto eq = binding.find('=');
      if (eq == std::string::npos) {
        throw CLI::ValidationError(
            "--prefix", "expected name=namespace, got '" + binding + "'");
      }
      std::string name = binding.substr(0, eq);
      if (!name.empty() && name.back() == ':') name.pop_back();
      ctx.prefixes.set(std::move(name), binding.substr(eq + 1));
    }
    ctx.default_ns = default_ns;
    if (auto ns = ctx.prefixes.lookup(""); ns && ctx.default_ns.empty()) {
      ctx.default_ns = std::string(*ns);
    }
    return ctx;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const std::string& prompt_dir) {
  CLI::App app{"OWL 2 ontology toolkit", "owlkit"};
  app.require_subcommand(1);
  const auto syntaxes = CLI::IsMember({"manchester", "dl"});

  std::string in_path;
  std::string out_path;
  std::string query;
  std::string syntax = "manchester";

  auto* convert = app.add_subcommand("convert", "Re-serialize an ontology");
  std::string from = "functional";
  std::string to = "functional";
  convert->add_option("--in", in_path)->required();
  convert->add_option("--from", from)->check(CLI::IsMember({"functional"}));
  convert->add_option("--out", out_path)->required();
  convert->add_option("--to", to)->check(
      CLI::IsMember({"functional", "turtle"}));

  auto* render = app.add_subcommand("render", "Translate a class expression");
  std::string expr;
  std::string render_to;
  ContextFlags render_ctx;
  render->add_option("--expr", expr)->required();
  render->add_option("--from", syntax)->check(syntaxes);
  render->add_option("--to", render_to)
      ->required()
      ->check(CLI::IsMember({"manchester", "dl", "sparql"}));
  render_ctx.add_to(render);

  auto* reason = app.add_subcommand("reason", "Retrieve instances");
  bool no_hierarchy = false;
  bool no_vacuous = false;
  reason->add_option("--in", in_path)->required();
  reason->add_option("--query", query)->required();
  reason->add_option("--syntax", syntax)->check(syntaxes);
  reason->add_flag("--no-hierarchy", no_hierarchy);
  reason->add_flag("--no-vacuous-forall", no_vacuous);

  auto* hierarchy = app.add_subcommand("hierarchy", "Class hierarchy query");
  std::string class_name;
  std::string direction;
  bool direct = false;
  hierarchy->add_option("--in", in_path)->required();
  hierarchy->add_option("--class", class_name)->required();
  hierarchy->add_option("--direction", direction)
      ->required()
      ->check(CLI::IsMember({"sub", "super", "equiv"}));
  hierarchy->add_flag("--direct", direct);

  auto* stats = app.add_subcommand("stats", "Signature counts");
  stats->add_option("--in", in_path)->required();

  auto* ebr_train = app.add_subcommand("ebr-train", "Train an embedding model");
  ebr::TrainingConfig training;
  ebr_train->add_option("--in", in_path)->required();
  ebr_train->add_option("--out", out_path)->required();
  ebr_train->add_option("--seed", training.seed);
  ebr_train->add_option("--dim", training.dim);
  ebr_train->add_option("--epochs", training.epochs);

  auto* ebr_query = app.add_subcommand("ebr-query", "Approximate retrieval");
  std::string model_path;
  double gamma = 0.5;
  ebr_query->add_option("--model", model_path)->required();
  ebr_query->add_option("--in", in_path)->required();
  ebr_query->add_option("--query", query)->required();
  ebr_query->add_option("--syntax", syntax)->check(syntaxes);
  ebr_query->add_option("--gamma", gamma)->check(CLI::Range(0.0, 1.0));

  auto* generate = app.add_subcommand("generate", "Ontology from text");
  std::string text_path;
  std::string mock_path;
  std::string prompts = prompt_dir;
  std::vector<std::string> classes;
  textgen::GenerationConfig gen;
  bool no_llm_classes = false;
  generate->add_option("--text", text_path)->required();
  generate->add_option("--out", out_path)->required();
  generate->add_option("--mock", mock_path, "Recorded transcript");
  generate->add_option("--ns", gen.ns, "Target namespace");
  generate->add_option("--class", classes, "Predefined class name");
  generate->add_flag("--no-llm-classes", no_llm_classes);
  generate->add_option("--model", gen.model);
  generate->add_option("--prompts", prompts, "Prompt template directory");

  auto* swrl = app.add_subcommand("swrl-parse", "Parse and echo a SWRL rule");
  std::string rule;
  ContextFlags swrl_ctx;
  swrl->add_option("--rule", rule)->required();
  swrl_ctx.add_to(swrl);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (convert->parsed()) {
      Ontology::load(in_path).save(out_path, parse_format(to));
    } else if (render->parsed()) {
      const PrefixContext ctx = render_ctx.context();
      const ClassExpression ce = parse_expression(expr, syntax, ctx);
      if (render_to == "sparql") {
        out << sparql::to_sparql(ce, ctx).text << '\n';
      } else if (render_to == "dl") {
        out << render_dl(ce, ctx) << '\n';
      } else {
        out << render_manchester(ce, ctx) << '\n';
      }
    } else if (reason->parsed()) {
      const Ontology onto = Ontology::load(in_path);
      const ClassExpression ce = parse_expression(
          query, syntax, PrefixContext::for_ontology(onto));
      const Snapshot s(onto, {.infer_hierarchy = !no_hierarchy,
                              .universal_vacuous = !no_vacuous});
      print_sorted(out, s.instances(ce));
    } else if (hierarchy->parsed()) {
      const Ontology onto = Ontology::load(in_path);
      const OWLClass c(PrefixContext::for_ontology(onto).resolve(class_name));
      const Snapshot s(onto);
      if (direction == "sub") {
        print_sorted(out, s.sub_classes(c, direct));
      } else if (direction == "super") {
        print_sorted(out, s.super_classes(c, direct));
      } else {
        print_sorted(out, s.equivalent_classes(c));
      }
    } else if (stats->parsed()) {
      const Ontology onto = Ontology::load(in_path);
      out << "axioms " << onto.axiom_count() << '\n'
          << "classes " << onto.classes_in_signature().size() << '\n'
          << "object_properties "
          << onto.object_properties_in_signature().size() << '\n'
          << "data_properties " << onto.data_properties_in_signature().size()
          << '\n'
          << "individuals " << onto.individuals_in_signature().size() << '\n';
    } else if (ebr_train->parsed()) {
      const auto triples = ebr::extract_triples(Ontology::load(in_path));
      if (triples.skipped > 0) {
        err << "skipped " << triples.skipped
            << " complex class assertion(s)\n";
      }
      const auto result = ebr::train(triples.triples, training);
      result.model.save(out_path);
      if (!result.epoch_loss.empty()) {
        out << "first_epoch_loss " << result.epoch_loss.front() << '\n'
            << "final_epoch_loss " << result.epoch_loss.back() << '\n';
      }
    } else if (ebr_query->parsed()) {
      const Ontology onto = Ontology::load(in_path);
      const auto model = ebr::EmbeddingModel::load(model_path);
      const ClassExpression ce = parse_expression(
          query, syntax, PrefixContext::for_ontology(onto));
      print_sorted(out, ebr::retrieve(model, ce, ebr::universe_of(onto), gamma));
    } else if (generate->parsed()) {
      gen.allow_llm_classes = !no_llm_classes;
      for (const auto& name : classes) {
        gen.predefined_classes.emplace_back(IRI(gen.ns + name));
      }
      if (prompts.empty()) {
        throw Error("no prompt directory; pass --prompts");
      }
      gen.prompts = textgen::PromptTemplates::load(prompts);
      const std::string text = read_text(text_path);
      std::unique_ptr<textgen::ExtractorClient> client;
      if (!mock_path.empty()) {
        client = std::make_unique<textgen::MockClient>(
            textgen::Transcript::load(mock_path));
      } else {
        client = std::make_unique<textgen::HttpChatClient>(
            textgen::http_settings_from_environment(gen.model));
      }
      textgen::generate_ontology(text, *client, gen).save(out_path);
    } else if (swrl->parsed()) {
      out << render_swrl(parse_swrl(rule, swrl_ctx.context()),
                         swrl_ctx.context())
          << '\n';
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace owlkit::cli
