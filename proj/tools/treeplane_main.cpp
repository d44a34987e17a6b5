#include <CLI11.hpp>
#include <iostream>

#include "treeplane/dot.hpp"
#include "treeplane/error.hpp"
#include "treeplane/json_io.hpp"

namespace tp = treeplane;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitSchema = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitResource = 4;

int exit_code_for(const tp::Error& e) {
  switch (e.code()) {
    case tp::Errc::schema_error:
      return kExitSchema;
    case tp::Errc::level_overflow:
    case tp::Errc::fuel_exhausted:
      return kExitResource;
    default:
      return kExitConstruction;
  }
}

// JSON is always the primary artifact; "--emit dot" adds a Graphviz view
// of the tree next to it.
void maybe_emit_dot(const tp::FiniteTree& t, const std::string& out,
                    const std::string& emit) {
  if (emit != "dot") return;
  std::ofstream f(out + ".dot");
  f << tp::to_dot(t);
}

tp::DenseSequence sequence_from_options(const std::string& file,
                                        const std::string& builtin) {
  if (!file.empty())
    return tp::dense_sequence_from_json(tp::load_json_file(file));
  return tp::dense_sequence_from_json(tp::Json{{"builtin", builtin}});
}

tp::TreeOracle oracle_from_options(const std::string& file,
                                   const std::string& family,
                                   std::uint64_t seed) {
  if (!file.empty()) return tp::tree_oracle_from_json(tp::load_json_file(file));
  tp::Json j{{"family", family}};
  if (family == "seeded_miller" || family == "seeded_silver")
    j["params"] = tp::Json{{"seed", seed}};
  if (family == "level_split")
    j["params"] = tp::Json{{"levels", {0, 2, 4}}, {"period", 2}};
  return tp::tree_oracle_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "treeplane: finite certified fragments of tree rectangles inscribed "
      "into large planar sets"};
  app.require_subcommand(1);

  std::string out = "out.json";
  std::string emit = "json";
  std::string dense_file, builtin = "miller_U";
  std::size_t levels = 2, depth = 6, fuel = 10000, rounds = 3, bound = 1;
  std::size_t max_levels = 6, index_n = 1, count = 8;
  std::uint64_t seed = 1;

  auto* insc = app.add_subcommand("inscribe-category",
                                  "build labeled trees inside a descending "
                                  "dense-open sequence and verify them");
  insc->add_option("--dense-seq", dense_file, "dense sequence descriptor file");
  insc->add_option("--builtin", builtin, "builtin oracle (miller_U|silver_U)");
  insc->add_option("--levels", levels, "generations to build");
  insc->add_option("--max-levels", max_levels, "resource bound on levels");
  insc->add_option("--out", out, "output path");
  insc->add_option("--emit", emit, "json|dot");

  std::string stages_file, set_file;
  auto* inscm = app.add_subcommand(
      "inscribe-measure", "inscribe a uniformly perfect square into an "
                          "ascending clopen stage family");
  inscm->add_option("--stages", stages_file, "stage list file");
  inscm->add_option("--count", count, "builtin band-complement stage count");
  inscm->add_option("--levels", levels, "splitting generations");
  inscm->add_option("--out", out, "output path");
  inscm->add_option("--emit", emit, "json|dot");

  auto* silv = app.add_subcommand("silver-closed",
                                  "grow a Silver tree inside a clopen set of "
                                  "positive measure");
  silv->add_option("--set", set_file, "clopen set file");
  silv->add_option("--levels", levels, "splitting generations");
  silv->add_option("--out", out, "output path");
  silv->add_option("--emit", emit, "json|dot");

  auto* fsig = app.add_subcommand(
      "build-fsigma",
      "grow the finitely branching tree of nearly full mass");
  fsig->add_option("--index", index_n, "construction index n");
  fsig->add_option("--depth", depth, "levels to build");
  fsig->add_option("--fuel", fuel, "cutoff search fuel");
  fsig->add_option("--out", out, "output path");

  std::string witness_kind = "miller_square", oracle_file, family = "full";
  auto* wit = app.add_subcommand("witness",
                                 "produce an avoidance witness with its "
                                 "generator-exhaustion certificate");
  wit->add_option("--kind", witness_kind,
                  "miller_square|laver|silver_square|up_miller|small_set");
  wit->add_option("--oracle", oracle_file, "tree oracle descriptor file");
  wit->add_option("--family", family, "builtin oracle family");
  wit->add_option("--seed", seed, "seed for the seeded families");
  std::size_t gen_bound = 0;
  wit->add_option("--rounds", rounds, "alternation rounds");
  wit->add_option("--depth", depth, "depth bound");
  wit->add_option("--length", bound, "prefix length");
  wit->add_option("--bound", gen_bound,
                  "requested generator-exhaustion bound (adds rounds until "
                  "the witness reaches it)");
  wit->add_option("--n", index_n, "generator family index");
  wit->add_option("--fuel", fuel, "enumeration fuel");
  wit->add_option("--out", out, "output path");

  std::string schedule_file;
  std::size_t word_len = 2;
  std::size_t max_letter = 2;
  auto* gen = app.add_subcommand("generic",
                                 "meet a finite schedule of dense sets from "
                                 "the root condition");
  gen->add_option("--schedule", schedule_file, "schedule file");
  gen->add_option("--word-len", word_len, "slalom word length bound");
  gen->add_option("--max-letter", max_letter, "slalom letter bound");
  gen->add_option("--n", index_n, "box separation length bound");
  gen->add_option("--out", out, "output path");
  gen->add_option("--emit", emit, "json|dot");

  std::string artifact_file, verify_kind = "inscription";
  auto* ver = app.add_subcommand("verify",
                                 "replay the certificates of a finished run");
  ver->add_option("--kind", verify_kind, "inscription|measure|silver");
  ver->add_option("--artifact", artifact_file, "artifact file")->required();
  ver->add_option("--stages", stages_file, "stage list file (measure)");
  ver->add_option("--count", count, "builtin stage count (measure)");
  ver->add_option("--set", set_file, "clopen set file (silver)");
  ver->add_option("--dense-seq", dense_file, "dense sequence (inscription)");
  ver->add_option("--builtin", builtin, "builtin oracle (inscription)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (insc->parsed()) {
      tp::DenseSequence g = sequence_from_options(dense_file, builtin);
      tp::InscriptionLimits limits;
      limits.max_levels = max_levels;
      tp::InscriptionResult r = tp::inscribe_category(g, levels, limits);
      tp::VerificationReport rep = tp::verify_inscription(r, g);
      tp::save_json_file(out, tp::inscription_to_json(r));
      maybe_emit_dot(r.miller_approx, out, emit);
      for (const std::string& f : rep.failures) std::cerr << f << '\n';
      std::cout << "labels=" << r.labels.size()
                << " checked_pairs=" << rep.pairs_checked
                << (rep.ok() ? " verified" : " FAILED") << '\n';
      return rep.ok() ? 0 : kExitVerifyFailed;
    }
    if (inscm->parsed()) {
      std::vector<tp::ClopenPlane> stages =
          stages_file.empty()
              ? tp::band_complement_stages(count)
              : tp::stages_from_json(tp::load_json_file(stages_file));
      tp::PlaneInscription r = tp::inscribe_measure(stages, levels);
      auto failures = tp::replay_plane_inscription(r, stages);
      tp::save_json_file(out, tp::plane_inscription_to_json(r));
      maybe_emit_dot(r.tree, out, emit);
      for (const std::string& f : failures) std::cerr << f << '\n';
      std::cout << "steps=" << r.steps.size()
                << (failures.empty() ? " verified" : " FAILED") << '\n';
      return failures.empty() ? 0 : kExitVerifyFailed;
    }
    if (silv->parsed()) {
      tp::ClopenSet f = set_file.empty()
                            ? tp::ClopenSet::cylinder(tp::Node{0})
                            : tp::clopen_from_json(tp::load_json_file(set_file));
      tp::SilverInscription r = tp::silver_in_closed(f, levels);
      auto failures = tp::replay_silver_inscription(r, f);
      tp::save_json_file(out, tp::silver_inscription_to_json(r));
      maybe_emit_dot(r.tree, out, emit);
      for (const std::string& fmsg : failures) std::cerr << fmsg << '\n';
      std::cout << "steps=" << r.steps.size()
                << (failures.empty() ? " verified" : " FAILED") << '\n';
      return failures.empty() ? 0 : kExitVerifyFailed;
    }
    if (fsig->parsed()) {
      tp::FSigmaStage s = tp::build_f_sigma_avoiding_miller(
          tp::geometric_measured_oracle(), index_n, depth, fuel);
      tp::save_json_file(out, tp::fsigma_to_json(s));
      std::cout << "cutoffs=" << s.cutoffs.size()
                << " bound=" << s.certified_bound.to_string() << '\n';
      return 0;
    }
    if (wit->parsed()) {
      if (witness_kind == "miller_square") {
        tp::TreeOracle t = oracle_from_options(oracle_file, family, seed);
        tp::AvoidanceWitness w = tp::miller_avoidance_witness(t, rounds, fuel);
        std::size_t extra = rounds;
        while (gen_bound > 0 && w.checked_generator_bound < gen_bound) {
          if (++extra > rounds + 64)
            throw tp::Error(tp::Errc::fuel_exhausted,
                            "requested bound not reached within 64 extra "
                            "rounds");
          w = tp::miller_avoidance_witness(t, extra, fuel);
        }
        tp::save_json_file(out, tp::avoidance_to_json(w));
        std::cout << "generators_examined=" << w.generators_examined << '\n';
      } else if (witness_kind == "laver") {
        tp::TreeOracle t = oracle_from_options(
            oracle_file, family == "full" ? "chain_then_full" : family, seed);
        if (oracle_file.empty() && family == "chain_then_full") {
          t = tp::chain_then_full(tp::Node{}, tp::Alphabet::omega);
        }
        tp::Node x = tp::laver_witness(t, bound, fuel);
        tp::ZeroHitReport zr = tp::laver_g_membership(x, 1);
        tp::save_json_file(
            out, tp::Json{{"x", tp::node_to_json(x)},
                          {"zero_hits", zr.indices},
                          {"satisfied", zr.satisfied}});
        std::cout << "length=" << x.size() << '\n';
      } else if (witness_kind == "silver_square") {
        tp::TreeOracle t = oracle_from_options(
            oracle_file, family == "full" ? "seeded_silver" : family, seed);
        if (oracle_file.empty() && family == "full")
          t = tp::full_tree(tp::Alphabet::binary);
        tp::AvoidanceWitness w = tp::silver_square_witness(t, depth, fuel);
        tp::save_json_file(out, tp::avoidance_to_json(w));
        std::cout << "generators_examined=" << w.generators_examined << '\n';
      } else if (witness_kind == "up_miller") {
        tp::TreeOracle t = oracle_from_options(
            oracle_file, family == "full" ? "level_split" : family, seed);
        tp::UpMillerWitness w = tp::up_miller_witness(t, depth, index_n, fuel);
        tp::save_json_file(out, tp::up_miller_to_json(w));
        std::cout << "generators_examined=" << w.generators_examined << '\n';
      } else if (witness_kind == "small_set") {
        tp::TreeOracle t = oracle_from_options(
            oracle_file, family == "full" ? "seeded_silver" : family, seed);
        if (oracle_file.empty() && family == "full")
          t = tp::full_tree(tp::Alphabet::binary);
        tp::SmallSetSpec spec = tp::SmallSetSpec::default_spec(depth);
        tp::SmallSetWitness w = tp::small_set_witness(spec, t, depth, fuel);
        tp::save_json_file(out, tp::small_set_to_json(w));
        std::cout << "hits=" << w.hit_intervals.size() << '\n';
      } else {
        throw tp::Error(tp::Errc::schema_error,
                        "unknown witness kind '" + witness_kind + "'");
      }
      return 0;
    }
    if (gen->parsed()) {
      std::vector<tp::DenseSetRefiner> schedule =
          schedule_file.empty()
              ? tp::default_schedule(word_len,
                                     static_cast<tp::Letter>(max_letter),
                                     index_n, tp::make_miller_u_oracle())
              : tp::schedule_from_json(tp::load_json_file(schedule_file));
      auto [tree, log] = tp::meet_dense(tp::Condition::root_only(), schedule);
      // imprint checks on the finite output
      bool ok = true;
      if (schedule_file.empty()) {
        for (std::size_t len = 1; len <= word_len && ok; ++len) {
          std::vector<tp::Letter> cur(len, 0);
          while (true) {
            if (!tp::has_slalom_imprint(tree, tp::Node(cur))) {
              ok = false;
              break;
            }
            std::size_t i = len;
            while (i > 0 && cur[i - 1] == max_letter) {
              cur[i - 1] = 0;
              --i;
            }
            if (i == 0) break;
            ++cur[i - 1];
          }
        }
      }
      tp::save_json_file(out, tp::Json{{"tree", tp::tree_to_json(tree)},
                                       {"chain", tp::chain_log_to_json(log)}});
      maybe_emit_dot(tree, out, emit);
      std::cout << "steps=" << log.steps.size()
                << (ok ? " verified" : " FAILED") << '\n';
      return ok ? 0 : kExitVerifyFailed;
    }
    if (ver->parsed()) {
      tp::Json artifact = tp::load_json_file(artifact_file);
      std::vector<std::string> failures;
      if (verify_kind == "inscription") {
        tp::InscriptionResult r = tp::inscription_from_json(artifact);
        tp::DenseSequence g = sequence_from_options(dense_file, builtin);
        failures = tp::verify_inscription(r, g).failures;
      } else if (verify_kind == "measure") {
        std::vector<tp::ClopenPlane> stages =
            stages_file.empty()
                ? tp::band_complement_stages(count)
                : tp::stages_from_json(tp::load_json_file(stages_file));
        failures = tp::replay_plane_inscription(
            tp::plane_inscription_from_json(artifact), stages);
      } else if (verify_kind == "silver") {
        tp::ClopenSet f =
            set_file.empty()
                ? tp::ClopenSet::cylinder(tp::Node{0})
                : tp::clopen_from_json(tp::load_json_file(set_file));
        failures = tp::replay_silver_inscription(
            tp::silver_inscription_from_json(artifact), f);
      } else {
        throw tp::Error(tp::Errc::schema_error,
                        "unknown verify kind '" + verify_kind + "'");
      }
      for (const std::string& f : failures) std::cerr << f << '\n';
      std::cout << (failures.empty() ? "verified" : "FAILED") << '\n';
      return failures.empty() ? 0 : kExitVerifyFailed;
    }
  } catch (const tp::Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitConstruction;
  }
  return 0;
}
