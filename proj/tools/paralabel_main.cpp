// tools/paralabel_main.cpp
//
// Copyright 2026 The paralabel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command line front end. Stage subcommands (segment, align, pseudo,
// postprocess) and the fused `pipeline` subcommand call the same per
// document functions, so running the stages separately and running the
// pipeline produce identical bytes.
//
// Exit codes: 0 success, 1 runtime failure (bad input data, I/O), 2 usage.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "paralabel/align.hpp"
#include "paralabel/config.hpp"
#include "paralabel/document.hpp"
#include "paralabel/errors.hpp"
#include "paralabel/io.hpp"
#include "paralabel/metrics.hpp"
#include "paralabel/postproc.hpp"
#include "paralabel/pseudo.hpp"
#include "paralabel/render.hpp"
#include "paralabel/segment.hpp"
#include "paralabel/strings.hpp"
#include "paralabel/synth.hpp"

namespace fs = std::filesystem;

namespace paralabel {
namespace {

// ---------------------------------------------------------------------
// Config file + per-flag overrides. Flags win over the file; the file
// wins over built-in defaults.

struct ConfigCli {
  std::string config_path;
  PipelineConfig flag_values;
  std::string activation_mode = "sum";

  CLI::Option* o_kernel_w = nullptr;
  CLI::Option* o_kernel_h = nullptr;
  CLI::Option* o_patience = nullptr;
  CLI::Option* o_ratio = nullptr;
  CLI::Option* o_max_iter = nullptr;
  CLI::Option* o_sim = nullptr;
  CLI::Option* o_psi = nullptr;
  CLI::Option* o_phi = nullptr;
  CLI::Option* o_mode = nullptr;
  CLI::Option* o_category = nullptr;
  CLI::Option* o_conf = nullptr;
  CLI::Option* o_drop_pro_se = nullptr;
  CLI::Option* o_ignore_case = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    o_kernel_w = cmd->add_option("--kernel-w", flag_values.seg.kernel_w,
                                 "horizontal growth per side, px");
    o_kernel_h = cmd->add_option("--kernel-h", flag_values.seg.kernel_h,
                                 "vertical growth per side, px");
    o_patience = cmd->add_option("--patience", flag_values.seg.patience,
                                 "merge-free iterations before halting");
    o_ratio = cmd->add_option("--min-aggregation-ratio",
                              flag_values.seg.min_aggregation_ratio,
                              "halt once region count / initial count "
                              "falls to this");
    o_max_iter = cmd->add_option("--max-iterations",
                                 flag_values.seg.max_iterations,
                                 "hard iteration cap");
    o_sim = cmd->add_option("--sim-threshold", flag_values.sim_threshold,
                            "minimum token similarity for alignment");
    o_psi = cmd->add_option("--psi", flag_values.psi,
                            "line activation threshold");
    o_phi = cmd->add_option("--phi", flag_values.phi,
                            "active lines required per region (exclusive)");
    o_mode = cmd->add_option("--activation-mode", activation_mode,
                             "line activation mode: sum or any");
    o_category = cmd->add_option("--category", flag_values.category,
                                 "object category name");
    o_conf = cmd->add_option("--confidence-threshold",
                             flag_values.confidence_threshold,
                             "drop detections scoring below this");
    o_drop_pro_se = cmd->add_flag("--drop-pro-se", flag_values.drop_pro_se,
                                  "drop objects mentioning pro se parties");
    o_ignore_case = cmd->add_flag("--ignore-case", flag_values.ignore_case,
                                  "case-insensitive entity comparison");
  }

  PipelineConfig resolve() const {
    PipelineConfig cfg;
    if (!config_path.empty()) cfg = parse_config(read_file(config_path));
    if (o_kernel_w->count()) cfg.seg.kernel_w = flag_values.seg.kernel_w;
    if (o_kernel_h->count()) cfg.seg.kernel_h = flag_values.seg.kernel_h;
    if (o_patience->count()) cfg.seg.patience = flag_values.seg.patience;
    if (o_ratio->count()) {
      cfg.seg.min_aggregation_ratio = flag_values.seg.min_aggregation_ratio;
    }
    if (o_max_iter->count()) {
      cfg.seg.max_iterations = flag_values.seg.max_iterations;
    }
    if (o_sim->count()) cfg.sim_threshold = flag_values.sim_threshold;
    if (o_psi->count()) cfg.psi = flag_values.psi;
    if (o_phi->count()) cfg.phi = flag_values.phi;
    if (o_mode->count()) {
      cfg.activation_mode = activation_mode_from_name(activation_mode);
    }
    if (o_category->count()) cfg.category = flag_values.category;
    if (o_conf->count()) {
      cfg.confidence_threshold = flag_values.confidence_threshold;
    }
    if (o_drop_pro_se->count()) cfg.drop_pro_se = flag_values.drop_pro_se;
    if (o_ignore_case->count()) cfg.ignore_case = flag_values.ignore_case;
    validate(cfg);
    return cfg;
  }
};

// ---------------------------------------------------------------------
// Shared helpers.

template <typename Fn>
void parallel_for(int n, int jobs, Fn fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= n) break;
          fn(i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<Document> load_documents(const std::string& in_path) {
  std::vector<std::string> files;
  if (fs::is_directory(in_path)) {
    files = list_files(in_path, ".ocr.json");
    if (files.empty()) {
      throw ValidationError("no .ocr.json files under " + in_path);
    }
  } else {
    files.push_back(in_path);
  }
  std::vector<Document> docs;
  docs.reserve(files.size());
  std::map<std::string, std::string> seen;
  for (const std::string& f : files) {
    Document doc = parse_document(read_file(f));
    auto [it, inserted] = seen.emplace(doc.doc_id, f);
    if (!inserted) {
      throw ValidationError("duplicate doc_id '" + doc.doc_id + "' in " + f +
                            " and " + it->second);
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::map<std::string, InexactLabel> load_labels(const std::string& path) {
  std::map<std::string, InexactLabel> out;
  for (InexactLabel& label : parse_inexact_labels(read_file(path))) {
    std::string id = label.doc_id;
    if (!out.emplace(id, std::move(label)).second) {
      throw ValidationError("duplicate doc_id '" + id + "' in " + path);
    }
  }
  return out;
}

// Resolves a per-document input that may be given as a directory (the
// usual case) or directly as a file (single-document runs).
std::string find_doc_file(const std::string& base, const std::string& doc_id,
                          const std::vector<std::string>& suffixes) {
  if (!fs::is_directory(base)) return base;
  for (const std::string& suffix : suffixes) {
    fs::path p = fs::path(base) / (doc_id + suffix);
    if (fs::exists(p)) return p.string();
  }
  throw ValidationError("no " + suffixes.front() + " file for document '" +
                        doc_id + "' under " + base);
}

void ensure_dir(const std::string& path) {
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec || !fs::is_directory(path)) {
    throw std::runtime_error("cannot create directory: " + path);
  }
}

// ---------------------------------------------------------------------
// Per-document stage functions. Stage subcommands and `pipeline` both
// call these; only the file plumbing differs.

DocRois run_segment(const Document& doc, const PipelineConfig& cfg) {
  DocRois out;
  out.doc_id = doc.doc_id;
  out.pages.reserve(doc.pages.size());
  for (const Page& page : doc.pages) {
    out.pages.push_back(
        segment(page.lines, cfg.seg, page.width_px, page.height_px));
  }
  return out;
}

AttentionMatrix run_align(const Document& doc, const InexactLabel& label,
                          const PipelineConfig& cfg) {
  std::vector<AttentionMatrix> parts;
  parts.reserve(label.entities.size());
  for (const LabeledEntity& entity : label.entities) {
    parts.push_back(align_tokens(doc, entity.text, cfg.sim_threshold));
  }
  if (parts.empty()) {
    AttentionMatrix empty;
    empty.rows = doc.word_count();
    return empty;
  }
  return concat_columns(parts);
}

std::vector<PseudoLabelSet> run_pseudo(const Document& doc,
                                       const DocRois& rois,
                                       const AttentionMatrix& attn,
                                       const PipelineConfig& cfg) {
  if (rois.doc_id != doc.doc_id) {
    throw ValidationError("region file doc_id '" + rois.doc_id +
                          "' does not match document '" + doc.doc_id + "'");
  }
  if (rois.pages.size() != doc.pages.size()) {
    throw ValidationError("region file for '" + doc.doc_id +
                          "' covers a different page count");
  }
  std::set<std::string> active =
      active_lines(attn, doc, cfg.psi, cfg.activation_mode);
  std::vector<PseudoLabelSet> out;
  out.reserve(doc.pages.size());
  for (size_t p = 0; p < doc.pages.size(); ++p) {
    std::vector<ParagraphRoi> selected =
        select_rois(rois.pages[p].rois, active, cfg.phi);
    out.push_back(
        emit_pseudo(doc, static_cast<int>(p), selected, cfg.category));
  }
  return out;
}

DocEntities run_postprocess(const Document& doc, const CocoDataset& coco,
                            const PipelineConfig& cfg) {
  PostprocOptions opt;
  opt.confidence_threshold = cfg.confidence_threshold;
  opt.category = cfg.category;
  opt.drop_pro_se = cfg.drop_pro_se;
  std::vector<std::vector<DetectedObject>> pages =
      ingest_detections(coco, doc, opt);
  return materialize_entities(doc, postprocess_document(doc, pages, opt));
}

// ---------------------------------------------------------------------
// Evaluation plumbing.

struct EvalInputs {
  std::vector<EntityKey> keys;
  std::vector<std::vector<std::string>> tokens;
};

EvalInputs eval_inputs(const DocEntities* doc, bool ignore_case) {
  EvalInputs out;
  if (doc == nullptr) return out;
  for (const EntityRecord& record : doc->entities) {
    std::vector<std::string> tokens = tokenize_whitespace(record.text);
    if (ignore_case) {
      for (std::string& t : tokens) t = to_lower_ascii(t);
    }
    out.keys.emplace_back(record.type, normalize_entity_text(tokens));
    out.tokens.push_back(std::move(tokens));
  }
  return out;
}

EvalReport evaluate_files(const std::vector<DocEntities>& pred,
                          const std::vector<DocEntities>& gold,
                          bool ignore_case, long long* documents) {
  std::map<std::string, const DocEntities*> pred_by_id, gold_by_id;
  for (const DocEntities& d : pred) pred_by_id[d.doc_id] = &d;
  for (const DocEntities& d : gold) gold_by_id[d.doc_id] = &d;
  std::map<std::string, int> ids;
  for (const auto& [id, _] : pred_by_id) ids[id] = 1;
  for (const auto& [id, _] : gold_by_id) ids[id] = 1;

  CorpusEval corpus;
  for (const auto& [id, _] : ids) {
    auto pit = pred_by_id.find(id);
    auto git = gold_by_id.find(id);
    EvalInputs p =
        eval_inputs(pit == pred_by_id.end() ? nullptr : pit->second,
                    ignore_case);
    EvalInputs g =
        eval_inputs(git == gold_by_id.end() ? nullptr : git->second,
                    ignore_case);
    corpus.add_document(p.keys, g.keys, p.tokens, g.tokens);
  }
  if (documents) *documents = corpus.documents();
  return corpus.report();
}

// ---------------------------------------------------------------------
// Subcommand option bags.

struct SegmentArgs {
  std::string in, out;
  int jobs = 1;
  ConfigCli config;
};

struct AlignArgs {
  std::string in, labels, out;
  bool json_matrices = false;
  int jobs = 1;
  ConfigCli config;
};

struct PseudoArgs {
  std::string in, rois, attn, out;
  int jobs = 1;
  ConfigCli config;
};

struct PostprocessArgs {
  std::string in, coco, out;
  int jobs = 1;
  ConfigCli config;
};

struct EvalArgs {
  std::string pred, gold, report;
  ConfigCli config;
};

struct SynthArgs {
  std::string out;
  int count = 1;
  uint64_t seed = 0;
  int columns = 2;
  int profiles = 2;
  double noise = 0.0;
  bool no_scramble = false;
  ConfigCli config;
};

struct RenderArgs {
  std::string in, rois, coco, entities, out;
};

struct PipelineArgs {
  std::string in, labels, out, entities, gold, report;
  int jobs = 1;
  ConfigCli config;
};

// ---------------------------------------------------------------------
// Subcommand bodies.

void cmd_segment(const SegmentArgs& args) {
  PipelineConfig cfg = args.config.resolve();
  std::vector<Document> docs = load_documents(args.in);
  ensure_dir(args.out);
  std::vector<std::string> payloads(docs.size());
  parallel_for(static_cast<int>(docs.size()), args.jobs, [&](int i) {
    payloads[i] = serialize_rois(run_segment(docs[i], cfg));
  });
  for (size_t i = 0; i < docs.size(); ++i) {
    fs::path out = fs::path(args.out) / (docs[i].doc_id + ".rois.json");
    write_file_atomic(out.string(), payloads[i]);
  }
}

void cmd_align(const AlignArgs& args) {
  PipelineConfig cfg = args.config.resolve();
  std::vector<Document> docs = load_documents(args.in);
  std::map<std::string, InexactLabel> labels = load_labels(args.labels);
  ensure_dir(args.out);
  std::vector<std::string> payloads(docs.size());
  parallel_for(static_cast<int>(docs.size()), args.jobs, [&](int i) {
    auto it = labels.find(docs[i].doc_id);
    if (it == labels.end()) {
      throw ValidationError("no label entry for document '" +
                            docs[i].doc_id + "'");
    }
    AttentionMatrix m = run_align(docs[i], it->second, cfg);
    payloads[i] =
        args.json_matrices ? save_attention_json(m) : save_attention_binary(m);
  });
  const char* suffix = args.json_matrices ? ".attn.json" : ".attn";
  for (size_t i = 0; i < docs.size(); ++i) {
    fs::path out = fs::path(args.out) / (docs[i].doc_id + suffix);
    write_file_atomic(out.string(), payloads[i]);
  }
}

void cmd_pseudo(const PseudoArgs& args) {
  PipelineConfig cfg = args.config.resolve();
  std::vector<Document> docs = load_documents(args.in);
  std::vector<std::vector<PseudoLabelSet>> sets(docs.size());
  parallel_for(static_cast<int>(docs.size()), args.jobs, [&](int i) {
    const Document& doc = docs[i];
    DocRois rois = parse_rois(
        read_file(find_doc_file(args.rois, doc.doc_id, {".rois.json"})));
    AttentionMatrix attn = load_attention(
        read_file(find_doc_file(args.attn, doc.doc_id,
                                {".attn", ".attn.json"})),
        doc.word_count());
    sets[i] = run_pseudo(doc, rois, attn, cfg);
  });
  std::vector<PseudoLabelSet> flat;
  std::vector<const Document*> refs;
  for (size_t i = 0; i < docs.size(); ++i) {
    refs.push_back(&docs[i]);
    flat.insert(flat.end(), sets[i].begin(), sets[i].end());
  }
  write_file_atomic(args.out,
                    serialize_coco(coco_from_pseudo(flat, refs, cfg.category)));
}

void cmd_postprocess(const PostprocessArgs& args) {
  PipelineConfig cfg = args.config.resolve();
  std::vector<Document> docs = load_documents(args.in);
  CocoDataset coco = parse_coco(read_file(args.coco));
  std::vector<DocEntities> out(docs.size());
  parallel_for(static_cast<int>(docs.size()), args.jobs, [&](int i) {
    out[i] = run_postprocess(docs[i], coco, cfg);
  });
  write_file_atomic(args.out, serialize_entities_file(out));
}

void cmd_eval(const EvalArgs& args) {
  PipelineConfig cfg = args.config.resolve();
  std::vector<DocEntities> pred = parse_entities_file(read_file(args.pred));
  std::vector<DocEntities> gold = parse_entities_file(read_file(args.gold));
  long long documents = 0;
  EvalReport report =
      evaluate_files(pred, gold, cfg.ignore_case, &documents);
  std::cout << render_report_table(report, documents);
  if (!args.report.empty()) {
    write_file_atomic(args.report, serialize_report(report, documents));
  }
}

void cmd_synth(const SynthArgs& args) {
  PipelineConfig cfg = args.config.resolve();
  ensure_dir(args.out);
  if (args.count < 1) throw ValidationError("--count must be positive");

  std::vector<InexactLabel> labels;
  std::vector<DocEntities> gold;
  nlohmann::json docs_json = nlohmann::json::array();
  for (int i = 0; i < args.count; ++i) {
    synth::SynthConfig sc;
    sc.seed = args.seed + static_cast<uint64_t>(i);
    sc.columns = args.columns;
    sc.profiles_per_page = args.profiles;
    sc.noise_rate = args.noise;
    sc.scramble = !args.no_scramble;
    synth::SynthResult result = synth::generate(sc);

    std::string ocr_name = result.doc.doc_id + ".ocr.json";
    std::string attn_name = result.doc.doc_id + ".attn";
    write_file_atomic((fs::path(args.out) / ocr_name).string(),
                      serialize_document(result.doc));
    AttentionMatrix attn = run_align(result.doc, result.label, cfg);
    write_file_atomic((fs::path(args.out) / attn_name).string(),
                      save_attention_binary(attn));
    gold.push_back(materialize_entities(result.doc, result.gold));
    labels.push_back(result.label);

    nlohmann::json entry;
    entry["doc_id"] = result.doc.doc_id;
    entry["ocr_file"] = ocr_name;
    entry["attn_file"] = attn_name;
    docs_json.push_back(entry);
  }
  write_file_atomic((fs::path(args.out) / "labels.json").string(),
                    serialize_inexact_labels(labels));
  write_file_atomic((fs::path(args.out) / "gold.json").string(),
                    serialize_entities_file(gold));

  nlohmann::json manifest;
  manifest["count"] = args.count;
  manifest["seed"] = args.seed;
  manifest["columns"] = args.columns;
  manifest["profiles_per_page"] = args.profiles;
  manifest["noise_rate"] = args.noise;
  manifest["scramble"] = !args.no_scramble;
  manifest["labels_file"] = "labels.json";
  manifest["gold_file"] = "gold.json";
  manifest["documents"] = docs_json;
  write_file_atomic((fs::path(args.out) / "manifest.json").string(),
                    manifest.dump(2) + "\n");
}

void cmd_render(const RenderArgs& args) {
  Document doc = parse_document(read_file(args.in));
  ensure_dir(args.out);
  std::vector<OverlayLayer> layers;

  if (!args.rois.empty()) {
    DocRois rois = parse_rois(read_file(args.rois));
    OverlayLayer layer;
    layer.name = "regions";
    layer.color = "#1f77b4";
    for (size_t p = 0; p < rois.pages.size(); ++p) {
      for (const ParagraphRoi& roi : rois.pages[p].rois) {
        layer.boxes.push_back(OverlayBox{static_cast<int>(p), roi.bbox});
      }
    }
    layers.push_back(std::move(layer));
  }
  if (!args.coco.empty()) {
    CocoDataset coco = parse_coco(read_file(args.coco));
    OverlayLayer layer;
    layer.name = "detections";
    layer.color = "#d62728";
    std::map<int, std::pair<std::string, int>> image_page;
    for (const CocoImage& image : coco.images) {
      image_page[image.id] = split_coco_file_name(image.file_name);
    }
    for (const CocoAnnotation& ann : coco.annotations) {
      auto it = image_page.find(ann.image_id);
      if (it == image_page.end() || it->second.first != doc.doc_id) continue;
      int page = it->second.second;
      if (page < 0 || page >= static_cast<int>(doc.pages.size())) continue;
      const Page& pg = doc.pages[page];
      BBox b{ann.bbox.x / pg.width_px, ann.bbox.y / pg.height_px,
             ann.bbox.w / pg.width_px, ann.bbox.h / pg.height_px};
      layer.boxes.push_back(OverlayBox{page, b});
    }
    layers.push_back(std::move(layer));
  }
  if (!args.entities.empty()) {
    OverlayLayer layer;
    layer.name = "entities";
    layer.color = "#2ca02c";
    for (const DocEntities& d : parse_entities_file(read_file(args.entities))) {
      if (d.doc_id != doc.doc_id) continue;
      for (const EntityRecord& record : d.entities) {
        std::map<int, BBox> per_page;
        for (int t : record.token_indices) {
          const Line& line = line_of(doc, t);
          const BBox& wb = doc.words[t].bbox;
          auto [it, inserted] = per_page.emplace(line.page, wb);
          if (!inserted) it->second = join(it->second, wb);
        }
        for (const auto& [page, box] : per_page) {
          layer.boxes.push_back(OverlayBox{page, box});
        }
      }
    }
    layers.push_back(std::move(layer));
  }

  for (size_t p = 0; p < doc.pages.size(); ++p) {
    char name[64];
    std::snprintf(name, sizeof(name), ".p%zu.svg", p);
    fs::path out = fs::path(args.out) / (doc.doc_id + name);
    write_file_atomic(out.string(),
                      render_page_svg(doc, static_cast<int>(p), layers));
  }
}

void cmd_pipeline(const PipelineArgs& args) {
  PipelineConfig cfg = args.config.resolve();
  std::vector<Document> docs = load_documents(args.in);
  std::map<std::string, InexactLabel> labels = load_labels(args.labels);

  std::vector<std::vector<PseudoLabelSet>> sets(docs.size());
  parallel_for(static_cast<int>(docs.size()), args.jobs, [&](int i) {
    const Document& doc = docs[i];
    auto it = labels.find(doc.doc_id);
    if (it == labels.end()) {
      throw ValidationError("no label entry for document '" + doc.doc_id +
                            "'");
    }
    DocRois rois = run_segment(doc, cfg);
    AttentionMatrix attn = run_align(doc, it->second, cfg);
    sets[i] = run_pseudo(doc, rois, attn, cfg);
  });

  std::vector<PseudoLabelSet> flat;
  std::vector<const Document*> refs;
  for (size_t i = 0; i < docs.size(); ++i) {
    refs.push_back(&docs[i]);
    flat.insert(flat.end(), sets[i].begin(), sets[i].end());
  }
  CocoDataset coco = coco_from_pseudo(flat, refs, cfg.category);
  write_file_atomic(args.out, serialize_coco(coco));

  if (!args.entities.empty() || !args.gold.empty()) {
    std::vector<DocEntities> extracted(docs.size());
    parallel_for(static_cast<int>(docs.size()), args.jobs, [&](int i) {
      extracted[i] = run_postprocess(docs[i], coco, cfg);
    });
    if (!args.entities.empty()) {
      write_file_atomic(args.entities, serialize_entities_file(extracted));
    }
    if (!args.gold.empty()) {
      std::vector<DocEntities> gold = parse_entities_file(read_file(args.gold));
      long long documents = 0;
      EvalReport report =
          evaluate_files(extracted, gold, cfg.ignore_case, &documents);
      std::cout << render_report_table(report, documents);
      if (!args.report.empty()) {
        write_file_atomic(args.report, serialize_report(report, documents));
      }
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "paralabel: pseudo object labels and entity extraction for document "
      "layout analysis"};
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);

  SegmentArgs seg_args;
  CLI::App* seg = app.add_subcommand(
      "segment", "group OCR lines into paragraph regions");
  seg->add_option("--in", seg_args.in, "OCR JSON file or directory")
      ->required();
  seg->add_option("--out", seg_args.out, "output directory for region files")
      ->required();
  seg->add_option("--jobs", seg_args.jobs, "worker threads");
  seg_args.config.attach(seg);

  AlignArgs align_args;
  CLI::App* align = app.add_subcommand(
      "align", "align label texts to document words");
  align->add_option("--in", align_args.in, "OCR JSON file or directory")
      ->required();
  align->add_option("--labels", align_args.labels, "entity label file")
      ->required();
  align->add_option("--out", align_args.out,
                    "output directory for attention matrices")
      ->required();
  align->add_flag("--json", align_args.json_matrices,
                  "write JSON matrices instead of binary");
  align->add_option("--jobs", align_args.jobs, "worker threads");
  align_args.config.attach(align);

  PseudoArgs pseudo_args;
  CLI::App* pseudo = app.add_subcommand(
      "pseudo", "select regions by attention and emit pseudo labels");
  pseudo->add_option("--in", pseudo_args.in, "OCR JSON file or directory")
      ->required();
  pseudo->add_option("--rois", pseudo_args.rois,
                     "region file or directory from `segment`")
      ->required();
  pseudo->add_option("--attn", pseudo_args.attn,
                     "attention matrix file or directory")
      ->required();
  pseudo->add_option("--out", pseudo_args.out, "output COCO JSON path")
      ->required();
  pseudo->add_option("--jobs", pseudo_args.jobs, "worker threads");
  pseudo_args.config.attach(pseudo);

  PostprocessArgs post_args;
  CLI::App* post = app.add_subcommand(
      "postprocess", "turn detected objects into named entities");
  post->add_option("--in", post_args.in, "OCR JSON file or directory")
      ->required();
  post->add_option("--coco", post_args.coco, "COCO detections JSON")
      ->required();
  post->add_option("--out", post_args.out, "output entity file path")
      ->required();
  post->add_option("--jobs", post_args.jobs, "worker threads");
  post_args.config.attach(post);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand(
      "eval", "score predicted entities against gold entities");
  eval->add_option("--pred", eval_args.pred, "predicted entity file")
      ->required();
  eval->add_option("--gold", eval_args.gold, "gold entity file")->required();
  eval->add_option("--report", eval_args.report, "also write a JSON report");
  eval_args.config.attach(eval);

  SynthArgs synth_args;
  CLI::App* synth_cmd = app.add_subcommand(
      "synth", "generate synthetic appellate brief pages");
  synth_cmd->add_option("--out", synth_args.out, "output directory")
      ->required();
  synth_cmd->add_option("--count", synth_args.count, "number of documents");
  synth_cmd->add_option("--seed", synth_args.seed, "base seed; doc i uses seed+i");
  synth_cmd->add_option("--columns", synth_args.columns, "1 or 2");
  synth_cmd->add_option("--profiles", synth_args.profiles,
                        "attorney profiles per page (1..6)");
  synth_cmd->add_option("--noise", synth_args.noise,
                        "per-character OCR noise rate");
  synth_cmd->add_flag("--no-scramble", synth_args.no_scramble,
                      "keep column-major reading order");
  synth_args.config.attach(synth_cmd);

  RenderArgs render_args;
  CLI::App* render = app.add_subcommand(
      "render", "draw page overlays as SVG");
  render->add_option("--in", render_args.in, "OCR JSON file (one document)")
      ->required();
  render->add_option("--rois", render_args.rois, "region file to overlay");
  render->add_option("--coco", render_args.coco, "COCO boxes to overlay");
  render->add_option("--entities", render_args.entities,
                     "entity file to overlay");
  render->add_option("--out", render_args.out, "output directory")
      ->required();

  PipelineArgs pipe_args;
  CLI::App* pipe = app.add_subcommand(
      "pipeline", "segment + align + pseudo in one pass");
  pipe->add_option("--in", pipe_args.in, "OCR JSON file or directory")
      ->required();
  pipe->add_option("--labels", pipe_args.labels, "entity label file")
      ->required();
  pipe->add_option("--out", pipe_args.out, "output COCO JSON path")
      ->required();
  pipe->add_option("--entities", pipe_args.entities,
                   "also post-process the pseudo labels into this entity file");
  pipe->add_option("--gold", pipe_args.gold,
                   "score the extracted entities against this gold file");
  pipe->add_option("--report", pipe_args.report,
                   "write the evaluation report JSON here");
  pipe->add_option("--jobs", pipe_args.jobs, "worker threads");
  pipe_args.config.attach(pipe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (seg->parsed()) cmd_segment(seg_args);
  if (align->parsed()) cmd_align(align_args);
  if (pseudo->parsed()) cmd_pseudo(pseudo_args);
  if (post->parsed()) cmd_postprocess(post_args);
  if (eval->parsed()) cmd_eval(eval_args);
  if (synth_cmd->parsed()) cmd_synth(synth_args);
  if (render->parsed()) cmd_render(render_args);
  if (pipe->parsed()) cmd_pipeline(pipe_args);
  return 0;
}

}  // namespace
}  // namespace paralabel

int main(int argc, char** argv) {
  try {
    return paralabel::run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
