#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ruag/assemble.hpp"
#include "ruag/dataset.hpp"
#include "ruag/generation.hpp"
#include "ruag/grammar.hpp"
#include "ruag/guard.hpp"
#include "ruag/metrics.hpp"
#include "ruag/mining.hpp"
#include "ruag/model_io.hpp"
#include "ruag/partition.hpp"
#include "ruag/probe.hpp"
#include "ruag/recognizer.hpp"

#ifndef RUAG_DEFAULT_DATA_DIR
#define RUAG_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace ruag;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path data_root() {
  if (const char* env = std::getenv("RUAG_DATA_DIR"); env && *env) return env;
  return RUAG_DEFAULT_DATA_DIR;
}

// Paths that do not exist as given are looked up under the data root.
fs::path resolve_input(const std::string& path) {
  if (fs::exists(path)) return path;
  const fs::path alt = data_root() / path;
  if (fs::exists(alt)) return alt;
  throw std::runtime_error("input not found: '" + path + "' (also tried '" + alt.string() + "')");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << body;
}

Grammar load_grammar(const std::string& path) {
  const fs::path p = resolve_input(path);
  try {
    return parse_grammar(read_file(p));
  } catch (const Error& e) {
    throw std::runtime_error(p.string() + ": " + e.what());
  }
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

bool looks_like_dataset(const std::string& content) { return content.rfind("text\tlabel\tsplit\tsource", 0) == 0; }

struct ModelChoice {
  std::string model;
  std::string pos_grammar = "grammars/pos.cfg";
  std::string aic_grammar = "grammars/aic.cfg";
  bool no_heuristics = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--model", model, "Trained model file; the grammar recognizer is used when omitted");
    cmd->add_option("--pos-grammar", pos_grammar, "Positive grammar for the recognizer")->capture_default_str();
    cmd->add_option("--aic-grammar", aic_grammar, "AIC grammar for the recognizer")->capture_default_str();
    cmd->add_flag("--no-heuristics", no_heuristics, "Recognizer matches only the full utterance");
  }

  std::unique_ptr<Classifier> load() const {
    if (!model.empty()) return make_classifier(load_model_file(resolve_input(model)));
    RecognizerModel m{load_grammar(pos_grammar), load_grammar(aic_grammar), !no_heuristics};
    return std::make_unique<GrammarClassifier>(std::move(m));
  }
};

Label parse_label_flag(const std::string& s) {
  const auto l = parse_label(s);
  if (!l) throw UsageError("unknown label '" + s + "'");
  return *l;
}

SplitTag parse_split_flag(const std::string& s) {
  const auto t = parse_split(s);
  if (!t) throw UsageError("unknown split '" + s + "'");
  return *t;
}

const CLI::Range kAtLeastOne(std::size_t{1}, std::numeric_limits<std::size_t>::max(), "at least 1");

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, evaluate and deploy classifiers for the \"are you a robot?\" intent"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for every random choice in the command")->capture_default_str();
  app.set_config("--config", "", "INI/TOML file supplying defaults; sections name subcommands");

  // gen
  auto* gen = app.add_subcommand("gen", "Sample utterances from a grammar into a dataset file");
  std::string gen_grammar, gen_out, gen_label = "p", gen_split = "none";
  std::size_t gen_n = 0;
  bool gen_no_dedup = false;
  gen->add_option("--grammar", gen_grammar, "Grammar file")->required();
  gen->add_option("--n", gen_n, "Number of utterances")->required()->check(kAtLeastOne);
  gen->add_option("--label", gen_label, "Label written on every row (p or a)")->capture_default_str();
  gen->add_option("--split", gen_split, "Split written on every row")->capture_default_str();
  gen->add_flag("--no-dedup", gen_no_dedup, "Allow repeated utterances");
  gen->add_option("--out", gen_out, "Output dataset (stdout when omitted)");

  // stats
  auto* stats = app.add_subcommand("stats", "Derivation count and sampled unique strings of a grammar");
  std::string stats_grammar;
  std::size_t stats_n = 10000;
  stats->add_option("--grammar", stats_grammar, "Grammar file")->required();
  stats->add_option("--sample", stats_n, "Draws used for the unique-string estimate")->capture_default_str();

  // split
  auto* split = app.add_subcommand("split", "Partition a grammar's alternatives into train/val/test grammars");
  std::string split_grammar, split_dir = ".", split_manifest;
  PartitionConfig pcfg;
  split->add_option("--grammar", split_grammar, "Grammar file")->required();
  split->add_option("--out-dir", split_dir, "Directory for the three grammars and the manifest")->capture_default_str();
  split->add_option("--p", pcfg.p, "Probability mass duplicated into every split")->capture_default_str();
  split->add_option("--fractions", pcfg.split_fractions, "Train, val and test fractions")->expected(3);
  split->add_option("--min-alternatives", pcfg.min_alternatives_to_split,
                    "Rules with fewer alternatives stay shared unless marked @split")
      ->capture_default_str();
  split->add_option("--from-manifest", split_manifest, "Re-apply a saved manifest instead of drawing a partition");

  // train
  auto* train = app.add_subcommand("train", "Train a classifier on the rows with split=train");
  std::string train_kind, train_data, train_out;
  std::optional<std::size_t> hp_epochs, hp_batch, hp_dim, hp_ngrams;
  std::optional<double> hp_lr, hp_l2;
  std::optional<std::uint64_t> hp_buckets;
  train->add_option("kind", train_kind, "bowlr, ir, ngram or random")
      ->required()
      ->check(CLI::IsMember({"bowlr", "ir", "ngram", "random"}));
  train->add_option("--data", train_data, "Dataset file")->required();
  train->add_option("--out", train_out, "Model file")->required();
  train->add_option("--epochs", hp_epochs, "Training epochs");
  train->add_option("--lr", hp_lr, "Initial learning rate");
  train->add_option("--l2", hp_l2, "L2 penalty on the output weights");
  train->add_option("--batch", hp_batch, "Mini-batch size");
  train->add_option("--dim", hp_dim, "Embedding size (ngram)");
  train->add_option("--ngrams", hp_ngrams, "Longest word n-gram (ngram)");
  train->add_option("--buckets", hp_buckets, "Hash buckets (ngram)");

  // eval
  auto* eval = app.add_subcommand("eval", "Score a classifier on one split of a dataset");
  ModelChoice eval_model;
  eval_model.add_to(eval);
  std::string eval_data, eval_split = "test", eval_out, eval_audit;
  eval->add_option("--data", eval_data, "Dataset file")->required();
  eval->add_option("--split", eval_split, "Split to evaluate")->capture_default_str();
  eval->add_option("--out", eval_out, "Report TSV (stdout when omitted)");
  eval->add_option("--audit", eval_audit, "JSON-lines file with the confusion matrix and every prediction");

  // mine
  auto* mine = app.add_subcommand("mine", "Sample negative candidates from an unlabeled corpus");
  std::string mine_corpus, mine_pos, mine_method = "tfidf", mine_agg = "max", mine_out, mine_split = "none";
  std::size_t mine_n = 0;
  bool mine_reviewed = false;
  mine->add_option("--corpus", mine_corpus, "Corpus: one utterance per line, or a dataset file")->required();
  mine->add_option("--positives", mine_pos, "Positive utterances: one per line, or a dataset file (p rows)");
  mine->add_option("--n", mine_n, "Number of candidates")->required()->check(kAtLeastOne);
  mine->add_option("--method", mine_method, "tfidf or random")
      ->check(CLI::IsMember({"tfidf", "random"}))
      ->capture_default_str();
  mine->add_option("--aggregation", mine_agg, "Similarity aggregation over positives: max, mean or sum")
      ->check(CLI::IsMember({"max", "mean", "sum"}))
      ->capture_default_str();
  mine->add_flag("--reviewed", mine_reviewed, "Rows were checked by hand and may carry a real split");
  auto* mine_split_opt = mine->add_option("--split", mine_split, "Split for reviewed rows");
  mine_split_opt->needs(mine->get_option("--reviewed"));
  mine->add_option("--out", mine_out, "Output dataset (stdout when omitted)");

  // guard
  auto* guard_cmd = app.add_subcommand("guard", "Decide whether to disclose non-human identity");
  ModelChoice guard_model;
  guard_model.add_to(guard_cmd);
  std::string guard_text, guard_conf, guard_preset, guard_policy, guard_out;
  guard_cmd->add_option("--text", guard_text, "Single utterance; stdin lines are read when omitted");
  guard_cmd->add_option("--guard-config", guard_conf, "Response config file (key=value)");
  guard_cmd->add_option("--preset", guard_preset, "Named response preset")->check(CLI::IsMember(preset_names()));
  guard_cmd->add_option("--aic-policy", guard_policy, "clarify or pass_through")
      ->check(CLI::IsMember({"clarify", "pass_through"}));
  guard_cmd->add_option("--out", guard_out, "Output JSON lines (stdout when omitted)");

  // probe
  auto* probe = app.add_subcommand("probe", "Recall of a classifier on a set of positive probes");
  ModelChoice probe_model;
  probe_model.add_to(probe);
  std::string probe_file, probe_crowd, probe_grammar, probe_out;
  std::size_t probe_n = 100;
  probe->add_option("--probes", probe_file, "Probe utterances, one per line");
  probe->add_option("--crowd", probe_crowd, "Hand-written positives; half the probe set is drawn from them");
  probe->add_option("--grammar", probe_grammar, "Grammar supplying the other half of the probe set");
  probe->add_option("--n", probe_n, "Probe set size with --crowd/--grammar")->capture_default_str();
  probe->add_option("--out", probe_out, "Per-probe TSV (stdout when omitted)");

  // import
  auto* imp = app.add_subcommand("import", "Convert a delimited table into a dataset file");
  std::string imp_in, imp_out, imp_delim = ",", imp_default_split = "none", imp_source_col, imp_split_col = "split";
  ImportOptions iopts;
  imp->add_option("--in", imp_in, "Input table with a header row")->required();
  imp->add_option("--out", imp_out, "Output dataset (stdout when omitted)");
  imp->add_option("--delimiter", imp_delim, "Field delimiter: a single character or 'tab'")->capture_default_str();
  imp->add_option("--text-column", iopts.text_column, "Column holding the utterance")->capture_default_str();
  imp->add_option("--label-column", iopts.label_column, "Column holding the label")->capture_default_str();
  imp->add_option("--split-column", imp_split_col, "Column holding the split")->capture_default_str();
  imp->add_option("--default-split", imp_default_split, "Split when the table has no split column")
      ->capture_default_str();
  imp->add_option("--source-column", imp_source_col, "Column holding the source");
  imp->add_option("--source", iopts.default_source, "Source when there is no source column")->capture_default_str();

  // build
  auto* build = app.add_subcommand("build", "Assemble a labeled dataset from the grammars and a reviewed corpus");
  std::string build_pos = "grammars/pos.cfg", build_aic = "grammars/aic.cfg", build_neg = "grammars/neg.cfg",
              build_corpus = "corpus/chitchat.txt", build_out;
  std::size_t build_total = 0;
  bool build_reviewed = false, build_screen = false, build_iid = false;
  build->add_option("--pos-grammar", build_pos, "Positive grammar")->capture_default_str();
  build->add_option("--aic-grammar", build_aic, "AIC grammar")->capture_default_str();
  build->add_option("--neg-grammar", build_neg, "Hard-negative grammar")->capture_default_str();
  build->add_option("--corpus", build_corpus, "Unlabeled corpus, one utterance per line")->capture_default_str();
  build->add_option("--total", build_total, "Scale the default 6800-row plan to about this many rows");
  build->add_option("--p", pcfg.p, "Probability mass duplicated into every split")->capture_default_str();
  build->add_flag("--iid", build_iid, "Deal grammar rows to splits at random instead of partitioning rules");
  build->add_flag("--reviewed", build_reviewed, "Confirm that the corpus was checked for hidden positives");
  build->add_flag("--screen", build_screen, "Drop mined rows that the grammar recognizer labels POS or AIC");
  build->add_option("--out", build_out, "Output dataset (stdout when omitted)");

  // modify
  auto* mod = app.add_subcommand("modify", "Rewrite a token inside terminals into weighted variants");
  std::string mod_grammar, mod_target, mod_out, mod_rule;
  std::vector<std::string> mod_variants;
  double mod_original = 8.0;
  mod->add_option("--grammar", mod_grammar, "Grammar file")->required();
  mod->add_option("--target", mod_target, "Token to rewrite")->required();
  mod->add_option("--variants", mod_variants, "Replacement tokens, each at weight 1")->required();
  mod->add_option("--original-weight", mod_original, "Weight of the unchanged token")->capture_default_str();
  mod->add_option("--rule-name", mod_rule, "Name of the generated rule");
  mod->add_option("--out", mod_out, "Output grammar (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const Label label = parse_label_flag(gen_label);
      const SplitTag tag = parse_split_flag(gen_split);
      const Grammar g = load_grammar(gen_grammar);
      const SampleBatch batch = sample(g, gen_n, seed, !gen_no_dedup);
      Dataset ds;
      for (const auto& u : batch.utterances) ds.rows.push_back({u, label, tag, "grammar", {}});
      write_output(gen_out, write_dataset(ds));
    } else if (stats->parsed()) {
      const Grammar g = load_grammar(stats_grammar);
      const GrammarStats s = estimate_unique_strings(g, stats_n, seed);
      std::cout << "rules\t" << g.rules().size() << "\nderivations\t" << s.derivation_count << "\nunique_in_sample\t"
                << s.estimated_unique_strings << "\nsample_size\t" << s.sample_size << "\n";
    } else if (split->parsed()) {
      const Grammar g = load_grammar(split_grammar);
      pcfg.seed = seed;
      const PartitionedGrammar pg = split_manifest.empty() ? partition(g, pcfg)
                                                           : read_manifest(g, read_file(resolve_input(split_manifest)));
      fs::create_directories(split_dir);
      const std::string stem = stem_of(split_grammar);
      for (const Split s : kSplits)
        write_output((fs::path(split_dir) / (stem + "." + std::string(split_name(s)) + ".cfg")).string(),
                     serialize(pg.sub_grammar(s)));
      write_output((fs::path(split_dir) / (stem + ".manifest.tsv")).string(), write_manifest(pg));
    } else if (train->parsed()) {
      const Dataset ds = read_dataset_file(resolve_input(train_data));
      const auto rows = ds.with_split(SplitTag::train);
      AnyModel model;
      if (train_kind == "ir") {
        model = train_ir(rows);
      } else if (train_kind == "random") {
        model = fit_random_guess(rows, seed);
      } else {
        Hyperparams hp = train_kind == "bowlr" ? Hyperparams::bow_lr_defaults() : Hyperparams::ngram_defaults();
        if (hp_epochs) hp.epochs = *hp_epochs;
        if (hp_lr) hp.learning_rate = *hp_lr;
        if (hp_l2) hp.l2 = *hp_l2;
        if (hp_batch) hp.batch_size = *hp_batch;
        if (hp_dim) hp.dim = *hp_dim;
        if (hp_ngrams) hp.ngram_max = *hp_ngrams;
        if (hp_buckets) hp.hash_buckets = *hp_buckets;
        model = train_kind == "bowlr" ? train_bow_lr(rows, hp, seed) : train_ngram_linear(rows, hp, seed);
      }
      save_model_file(model, train_out);
    } else if (eval->parsed()) {
      const SplitTag tag = parse_split_flag(eval_split);
      const auto classifier = eval_model.load();
      const Dataset ds = read_dataset_file(resolve_input(eval_data));
      const auto rows = ds.with_split(tag);
      const Evaluation ev = evaluate(*classifier, rows);
      write_output(eval_out, report_header() + "\n" + report_row(ev.report) + "\n");
      if (!eval_audit.empty()) {
        std::string audit;
        nlohmann::ordered_json head;
        head["classifier"] = classifier->id();
        head["split"] = eval_split;
        head["n"] = ev.report.n;
        head["vacuous_precision"] = ev.report.vacuous_precision;
        nlohmann::ordered_json cm;
        for (const Label g : kLabels)
          for (const Label p : kLabels)
            cm[std::string(label_name(g))][std::string(label_name(p))] = ev.report.counts.at(g, p);
        head["confusion"] = cm;
        audit += head.dump() + "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
          nlohmann::ordered_json j;
          j["text"] = rows[i].text;
          j["gold"] = std::string(1, label_code(rows[i].label));
          j["predicted"] = std::string(1, label_code(ev.predictions[i].label));
          j["scores"] = ev.predictions[i].scores;
          audit += j.dump() + "\n";
        }
        write_output(eval_audit, audit);
      }
    } else if (mine->parsed()) {
      const std::string corpus_text = read_file(resolve_input(mine_corpus));
      std::vector<CorpusUtterance> corpus;
      if (looks_like_dataset(corpus_text)) {
        for (const auto& r : parse_dataset(corpus_text).rows) corpus.push_back({r.text, r.source});
      } else {
        std::istringstream in(corpus_text);
        std::string line;
        const std::string name = stem_of(mine_corpus);
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (!line.empty()) corpus.push_back({line, name});
        }
      }
      const MiningMethod method = mine_method == "tfidf" ? MiningMethod::tfidf_weighted : MiningMethod::random;
      std::vector<std::string> positives;
      if (method == MiningMethod::tfidf_weighted) {
        if (mine_pos.empty()) throw UsageError("--method tfidf needs --positives");
        const std::string pos_text = read_file(resolve_input(mine_pos));
        if (looks_like_dataset(pos_text)) {
          for (const auto& r : parse_dataset(pos_text).rows)
            if (r.label == Label::pos) positives.push_back(r.text);
        } else {
          positives = read_lines(resolve_input(mine_pos));
        }
      }
      const ScoreAggregation agg =
          mine_agg == "mean" ? ScoreAggregation::mean : mine_agg == "sum" ? ScoreAggregation::sum : ScoreAggregation::max;
      const MinedNegatives mined = mine_negatives(corpus, positives, mine_n, method, seed, agg);
      Dataset ds;
      ds.extra_columns = {"score", "review"};
      const SplitTag tag = mine_reviewed ? parse_split_flag(mine_split) : SplitTag::none;
      for (const auto& m : mined.utterances) {
        std::string score;
        if (m.score) {
          std::ostringstream ss;
          ss.precision(6);
          ss << std::fixed << *m.score;
          score = ss.str();
        }
        ds.rows.push_back({m.text, Label::neg, tag, m.source, {score, mine_reviewed ? "reviewed" : "pending"}});
      }
      write_output(mine_out, write_dataset(ds));
      if (!mine_reviewed)
        std::cerr << "note: " << ds.rows.size()
                  << " mined rows need manual review; some candidates may actually be POS or AIC\n";
    } else if (guard_cmd->parsed()) {
      DisclosureConfig cfg = preset("cc");
      if (!guard_conf.empty()) cfg = parse_guard_config(read_file(resolve_input(guard_conf)));
      if (!guard_preset.empty()) {
        const AicPolicy keep = cfg.aic_policy;
        cfg = preset(guard_preset);
        cfg.aic_policy = keep;
      }
      if (!guard_policy.empty()) cfg.aic_policy = guard_policy == "clarify" ? AicPolicy::clarify : AicPolicy::pass_through;
      compose_response(cfg);
      const auto classifier = guard_model.load();
      std::vector<std::string> inputs;
      if (guard_cmd->count("--text") > 0) {
        inputs.push_back(guard_text);
      } else {
        std::string line;
        while (std::getline(std::cin, line)) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          inputs.push_back(line);
        }
      }
      const auto predictions = classifier->predict_all(inputs);
      std::string out;
      for (const auto& p : predictions) out += to_json_line(decide(p, classifier->id(), cfg)) + "\n";
      write_output(guard_out, out);
    } else if (probe->parsed()) {
      std::vector<std::string> probes;
      if (!probe_file.empty()) {
        probes = read_lines(resolve_input(probe_file));
      } else if (!probe_grammar.empty()) {
        const std::vector<std::string> crowd =
            probe_crowd.empty() ? std::vector<std::string>{} : read_lines(resolve_input(probe_crowd));
        probes = assemble_probe_set(crowd, load_grammar(probe_grammar), probe_n, seed);
      } else {
        throw UsageError("probe needs --probes or --grammar");
      }
      const auto classifier = probe_model.load();
      const ProbeReport rep = probe_recall(*classifier, probes);
      std::string out = "text\tpredicted\tdetected\n";
      for (const auto& v : rep.verdicts)
        out += v.text + "\t" + label_code(v.predicted) + "\t" + (v.detected ? "1" : "0") + "\n";
      write_output(probe_out, out);
      std::cerr << "recall\t" << format_percent(rep.recall) << "\t(" << rep.detected << "/" << rep.verdicts.size()
                << ")\n";
    } else if (imp->parsed()) {
      if (imp_delim == "tab")
        iopts.delimiter = '\t';
      else if (imp_delim.size() == 1)
        iopts.delimiter = imp_delim[0];
      else
        throw UsageError("--delimiter must be one character or 'tab'");
      iopts.split_column = imp_split_col;
      iopts.default_split = parse_split_flag(imp_default_split);
      if (!imp_source_col.empty()) iopts.source_column = imp_source_col;
      write_output(imp_out, write_dataset(import_table(read_file(resolve_input(imp_in)), iopts)));
    } else if (build->parsed()) {
      if (!build_reviewed && !build_screen)
        throw UsageError("mined rows would enter the dataset unchecked; pass --reviewed or --screen");
      std::vector<CorpusUtterance> corpus;
      const std::string name = stem_of(build_corpus);
      for (auto& line : read_lines(resolve_input(build_corpus))) corpus.push_back({std::move(line), name});
      const Grammar pos = load_grammar(build_pos);
      const Grammar aic = load_grammar(build_aic);
      DatasetPlan plan;
      plan.partition = pcfg;
      if (build_total > 0) plan = plan.scaled_to(build_total);
      plan.intra_rule_partition = !build_iid;
      ReviewFn review;
      std::optional<RecognizerModel> screen;
      if (build_screen) {
        screen = RecognizerModel{pos, aic, true};
        review = [&screen](const std::string& t) { return classify(*screen, t) == Label::neg; };
      }
      const AssembledDataset built = assemble_dataset(pos, aic, load_grammar(build_neg), corpus, plan, seed, review);
      if (build_screen) std::cerr << "screened out " << built.rejected << " mined rows\n";
      write_output(build_out, write_dataset(built.dataset));
    } else if (mod->parsed()) {
      ModifierSpec spec = ModifierSpec::with_default_weights(mod_target, mod_variants);
      spec.original_weight = mod_original;
      spec.rule_name = mod_rule;
      const ModifierResult res = apply_modifier(load_grammar(mod_grammar), spec);
      for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
      write_output(mod_out, serialize(res.grammar));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
