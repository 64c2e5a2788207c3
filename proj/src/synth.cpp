// src/synth.cpp
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
// Layout model: a court header, a case-number line, a party block, then
// attorney profile blocks stacked in columns. Content pools are pairwise
// dissimilar under the alignment similarity (verified by tests), numbers
// are drawn under the same guard, and per-profile designation lead words
// vary so fuzzy alignment has a unique or distance-anchored target for
// every label token.

#include "paralabel/synth.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <random>

#include "paralabel/errors.hpp"
#include "paralabel/strings.hpp"

namespace paralabel {
namespace synth {

namespace {

constexpr double kPageW = 850.0;
constexpr double kMinPageH = 1100.0;
constexpr double kCharW = 7.0;
constexpr double kLineH = 14.0;
constexpr double kWordGap = 7.0;
constexpr double kLineStep = kLineH + 3.0;  // 3 px keeps blocks mergeable
constexpr double kTopY = 60.0;
constexpr double kHeaderCaseGap = 12.0;
constexpr double kCasePartyGap = 12.0;
constexpr double kPartyProfilesGap = 20.0;
constexpr double kProfileGap = 24.0;     // too wide for the default kernel
constexpr double kMajorDesigGap = 10.0;  // likewise
constexpr double kColumnX[2] = {80.0, 460.0};

const char* const kCategory = "attorney_profile";

const std::vector<std::string> kFirsts = {
    "MARGARET",  "THEODORE",   "ISABELLA", "FREDERICK",
    "GWENDOLYN", "NATHANIEL",  "PENELOPE", "SEBASTIAN",
    "ROSALIND",  "MAXIMILIAN", "CORDELIA", "BARTHOLOMEW",
    "EVANGELINE", "HENRIETTA", "LEOPOLD",  "OCTAVIA"};

const std::vector<std::string> kLasts = {
    "ABERNATHY", "BLACKWOOD", "CASTELLANO", "DELACROIX",
    "EISENBERG", "FAIRBANKS", "GALLAGHER",  "HOLLOWAY",
    "JERNIGAN",  "KOVALENKO", "LANCASTER",  "MIDDLETON",
    "OKONKWO",   "PEMBERTON", "RUTHERFORD", "SILVERSTEIN"};

const std::vector<std::string> kFirmWords = {
    "PINNACLE",    "CALDERONE",   "MERIWETHER", "STONEGATE",
    "BRIDGEWATER", "FALLOWFIELD", "RAVENSCROFT", "HOLLYBROOK",
    "ASHWORTH",    "DUNMORE",     "KETTERING",  "VANCLEEF"};

const std::vector<std::string> kFirmSuffixes = {"LLP", "LLC", "P.C.", "L.L.P."};

const std::vector<std::string> kStreetNames = {
    "KINGFISHER", "TAMARACK",   "BLUEBONNET", "COPPERFIELD",
    "DRIFTWOOD",  "ELDERBERRY", "FOXGLOVE",   "GREENBRIAR"};

const std::vector<std::string> kStreetTypes = {"STREET",  "AVENUE", "BOULEVARD",
                                               "PARKWAY", "LANE",   "DRIVE"};

const std::vector<std::string> kCities = {
    "CEDARVALE", "EASTHAVEN", "HARTSDALE", "MILLBROOK",
    "OAKHURST",  "PLAINVIEW", "RIVERTON",  "WINTERSET"};

const std::vector<std::string> kStates = {
    "CALIFORNIA", "TEXAS",  "VERMONT", "COLORADO",
    "NEBRASKA",   "OREGON", "MONTANA", "DELAWARE"};

const std::vector<std::string> kParties = {
    "PETITIONER", "RESPONDENT", "APPELLANT",
    "APPELLEE",   "INTERVENOR", "CROSS-COMPLAINANT"};

// Designation lead words. One per profile, so the "FOR" right after each
// is always distance-anchored to its own profile.
const std::vector<std::string> kDesignationLeads = {
    "ATTORNEYS", "COUNSEL",    "LAWYERS",
    "ADVOCATES", "SOLICITORS", "PROCTORS"};

const std::vector<std::string> kOrdinals = {
    "FIRST", "SECOND", "THIRD",  "FOURTH", "FIFTH",
    "SIXTH", "SEVENTH", "EIGHTH", "NINTH",  "TENTH"};

uint64_t pick(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

// Fisher-Yates with the raw generator; std::shuffle ordering is not
// pinned by the standard, this is.
std::vector<int> permutation(std::mt19937_64& rng, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(pick(rng, static_cast<uint64_t>(i) + 1));
    std::swap(v[i], v[j]);
  }
  return v;
}

bool dissimilar_to_all(const std::string& s,
                       const std::vector<std::string>& used) {
  for (const std::string& u : used) {
    if (token_similarity(u, s) >= 0.8) return false;
  }
  return true;
}

// Numbers that could fuzzy-match a previously issued number (one edit on
// a 5+ digit string crosses the 0.8 similarity line) are redrawn.
std::string draw_number(std::mt19937_64& rng, long lo, long hi,
                        std::vector<std::string>& used) {
  for (;;) {
    long v = lo + static_cast<long>(pick(rng, static_cast<uint64_t>(hi - lo + 1)));
    std::string s = std::to_string(v);
    if (dissimilar_to_all(s, used)) {
      used.push_back(s);
      return s;
    }
  }
}

struct PhoneNumber {
  std::string area, mid, last4;
};

PhoneNumber draw_phone(std::mt19937_64& rng, std::vector<std::string>& used) {
  PhoneNumber p;
  p.area = draw_number(rng, 301, 798, used);
  for (;;) {
    long mv = 210 + static_cast<long>(pick(rng, 780));
    long lv = 2100 + static_cast<long>(pick(rng, 6800));
    std::string mid = std::to_string(mv);
    std::string last4 = std::to_string(lv);
    std::string joined = mid + last4;  // the word "MID-LAST4" normalizes to this
    if (dissimilar_to_all(mid, used) && dissimilar_to_all(last4, used) &&
        dissimilar_to_all(joined, used) &&
        token_similarity(mid, last4) < 0.8) {
      used.push_back(mid);
      used.push_back(last4);
      used.push_back(joined);
      p.mid = mid;
      p.last4 = last4;
      return p;
    }
  }
}

std::string draw_case_number(std::mt19937_64& rng,
                             std::vector<std::string>& used) {
  for (;;) {
    long a = 10 + static_cast<long>(pick(rng, 80));
    long b = 1000 + static_cast<long>(pick(rng, 9000));
    std::string joined = std::to_string(a) + std::to_string(b);
    if (dissimilar_to_all(joined, used)) {
      used.push_back(joined);
      return std::to_string(a) + "-" + std::to_string(b);
    }
  }
}

struct LineSpec {
  std::vector<std::string> words;
  double x = 0.0;
  double y = 0.0;
};

double line_width(const std::vector<std::string>& words) {
  double w = 0.0;
  for (const std::string& word : words) w += kCharW * word.size();
  w += kWordGap * (words.size() - 1);
  return w;
}

struct PageBuilder {
  std::vector<LineSpec> lines;

  int add(std::vector<std::string> words, double x, double y) {
    lines.push_back(LineSpec{std::move(words), x, y});
    return static_cast<int>(lines.size()) - 1;
  }
  int add_centered(std::vector<std::string> words, double y) {
    double x = (kPageW - line_width(words)) / 2.0;
    return add(std::move(words), x, y);
  }
};

}  // namespace

void validate(const SynthConfig& cfg) {
  if (cfg.columns != 1 && cfg.columns != 2) {
    throw ValidationError("synth columns must be 1 or 2");
  }
  if (cfg.profiles_per_page < 1 || cfg.profiles_per_page > 6) {
    throw ValidationError("synth profiles_per_page must be in 1..6");
  }
  if (cfg.noise_rate < 0.0 || cfg.noise_rate > 1.0) {
    throw ValidationError("synth noise_rate must be in [0, 1]");
  }
}

SynthResult generate(const SynthConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);

  const int profiles = cfg.profiles_per_page;
  std::vector<int> first_idx = permutation(rng, static_cast<int>(kFirsts.size()));
  std::vector<int> last_idx = permutation(rng, static_cast<int>(kLasts.size()));
  std::vector<int> mi_idx = permutation(rng, 26);
  std::vector<int> firm_idx =
      permutation(rng, static_cast<int>(kFirmWords.size()));
  std::vector<int> street_idx =
      permutation(rng, static_cast<int>(kStreetNames.size()));
  std::vector<int> city_idx = permutation(rng, static_cast<int>(kCities.size()));
  std::vector<int> state_idx = permutation(rng, static_cast<int>(kStates.size()));
  std::vector<int> party_idx = permutation(rng, static_cast<int>(kParties.size()));
  std::vector<int> lead_idx =
      permutation(rng, static_cast<int>(kDesignationLeads.size()));
  const std::string& ordinal = kOrdinals[pick(rng, kOrdinals.size())];

  std::vector<std::string> used_numbers;
  std::string case_number = draw_case_number(rng, used_numbers);

  // Party names come from the same pools as attorney names, drawn first.
  std::string party_a = kFirsts[first_idx[0]] + " " + kLasts[last_idx[0]];
  std::string party_b = kFirsts[first_idx[1]] + " " + kLasts[last_idx[1]];

  PageBuilder page;
  std::vector<int> top_stream;
  double y = kTopY;

  top_stream.push_back(
      page.add_centered({"UNITED", "STATES", "COURT", "OF", "APPEALS"}, y));
  y += kLineStep;
  top_stream.push_back(
      page.add_centered({"FOR", "THE", ordinal, "CIRCUIT"}, y));
  y += kLineH + kHeaderCaseGap;

  top_stream.push_back(page.add_centered({"CASE", "NO.", case_number}, y));
  y += kLineH + kCasePartyGap;

  {
    std::vector<std::vector<std::string>> party_lines = {
        tokenize_whitespace(party_a + ","),
        {"PLAINTIFF-APPELLANT,"},
        {"V."},
        tokenize_whitespace(party_b + ","),
        {"DEFENDANT-APPELLEE."}};
    for (auto& words : party_lines) {
      top_stream.push_back(page.add(std::move(words), kColumnX[0], y));
      y += kLineStep;
    }
    y -= 3.0;
  }
  const double profiles_y = y + kPartyProfilesGap;

  struct ProfileBuild {
    std::vector<int> visual;    // line ids in visual (gold) order
    std::vector<int> emission;  // line ids in column stream order
    std::string label_text;
  };
  std::vector<ProfileBuild> built(profiles);
  std::vector<std::vector<int>> column_stream(cfg.columns);
  std::vector<double> cursor(cfg.columns, profiles_y);

  for (int p = 0; p < profiles; ++p) {
    const int column = p % cfg.columns;
    const double x = kColumnX[column];
    double& cy = cursor[column];

    // Profile 0 always splits its designation into a separate trailing
    // block when scrambling two columns, so the reading-order distortion
    // the pipeline must undo is guaranteed to occur.
    bool split = (p == 0 && cfg.scramble && cfg.columns == 2)
                     ? true
                     : pick(rng, 2) == 0;

    const std::string& first = kFirsts[first_idx[2 + p]];
    const std::string& last = kLasts[last_idx[2 + p]];
    std::string mi(1, static_cast<char>('A' + mi_idx[p]));
    const std::string& firm1 = kFirmWords[firm_idx[2 * p]];
    const std::string& firm2 = kFirmWords[firm_idx[2 * p + 1]];
    const std::string& suffix = kFirmSuffixes[pick(rng, kFirmSuffixes.size())];
    const std::string& street = kStreetNames[street_idx[p]];
    const std::string& street_type = kStreetTypes[pick(rng, kStreetTypes.size())];
    const std::string& city = kCities[city_idx[p]];
    const std::string& state = kStates[state_idx[p]];
    const std::string& party = kParties[party_idx[p]];
    const std::string& lead = kDesignationLeads[lead_idx[p]];

    std::string bar = draw_number(rng, 810000, 889999, used_numbers);
    std::string street_no = draw_number(rng, 1200, 8899, used_numbers);
    std::string suite = draw_number(rng, 100, 899, used_numbers);
    std::string zip = draw_number(rng, 90001, 98999, used_numbers);
    PhoneNumber phone = draw_phone(rng, used_numbers);
    std::string email = first.substr(0, 1) + last + "@" + firm1 + "LAW.COM";

    std::vector<std::vector<std::string>> contact = {
        {first, mi + ".", last, "(SBN", bar + ")"},
        {firm1, "&", firm2, suffix},
        {street_no, street, street_type + ",", "SUITE", suite},
        {city + ",", state, zip},
        {"TELEPHONE:", "(" + phone.area + ")", phone.mid + "-" + phone.last4},
        {"EMAIL:", email}};

    ProfileBuild& pb = built[p];
    auto place_block = [&](const std::vector<std::vector<std::string>>& block,
                           std::vector<int>& ids) {
      for (const auto& words : block) {
        ids.push_back(page.add(words, x, cy));
        cy += kLineStep;
      }
      cy -= 3.0;
    };

    std::vector<int> contact_ids;
    std::vector<int> desig_ids;
    if (split) {
      place_block(contact, contact_ids);
      cy += kMajorDesigGap;
      place_block({{lead, "FOR"}, {party}}, desig_ids);
    } else {
      contact.push_back({lead, "FOR", party});
      place_block(contact, contact_ids);
    }
    cy += kProfileGap;

    pb.visual = contact_ids;
    pb.visual.insert(pb.visual.end(), desig_ids.begin(), desig_ids.end());
    // OCR engines read the trailing designation fragment first often
    // enough that the scrambled corpus models it on split profiles.
    if (cfg.scramble && split) {
      pb.emission = desig_ids;
      pb.emission.insert(pb.emission.end(), contact_ids.begin(),
                         contact_ids.end());
    } else {
      pb.emission = pb.visual;
    }
    std::vector<int>& stream = column_stream[column];
    stream.insert(stream.end(), pb.emission.begin(), pb.emission.end());

    std::vector<std::string> parts = {
        first + " " + mi + ". " + last,
        bar,
        firm1 + " & " + firm2 + " " + suffix,
        street_no + " " + street + " " + street_type + " SUITE " + suite,
        city,
        state,
        "(" + phone.area + ") " + phone.mid + "-" + phone.last4,
        email,
        lead + " FOR " + party};
    std::string joined;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) joined += ", ";
      joined += parts[i];
    }
    pb.label_text = title_case(joined);
  }

  double bottom = 0.0;
  for (const LineSpec& line : page.lines) {
    bottom = std::max(bottom, line.y + kLineH);
  }
  const double page_h = std::max(kMinPageH, bottom + kTopY);

  // Emission order: top blocks, then the column streams, interleaved
  // line by line when scrambling.
  std::vector<int> emission = top_stream;
  if (cfg.scramble && cfg.columns == 2) {
    size_t a = 0, b = 0;
    while (a < column_stream[0].size() || b < column_stream[1].size()) {
      if (a < column_stream[0].size()) emission.push_back(column_stream[0][a++]);
      if (b < column_stream[1].size()) emission.push_back(column_stream[1][b++]);
    }
  } else {
    for (const std::vector<int>& stream : column_stream) {
      emission.insert(emission.end(), stream.begin(), stream.end());
    }
  }

  SynthResult out;
  char doc_id[32];
  std::snprintf(doc_id, sizeof(doc_id), "synth-%06llu",
                static_cast<unsigned long long>(cfg.seed));
  out.doc.doc_id = doc_id;
  Page pg;
  pg.width_px = static_cast<int>(kPageW);
  pg.height_px = static_cast<int>(page_h);

  std::vector<std::pair<int, int>> word_range(page.lines.size());
  int word_index = 0;
  int line_no = 0;
  for (int id : emission) {
    const LineSpec& spec = page.lines[id];
    Line line;
    char lid[16];
    std::snprintf(lid, sizeof(lid), "ln-%03d", line_no++);
    line.id = lid;
    line.page = 0;
    line.word_start = word_index;
    double wx = spec.x;
    for (const std::string& text : spec.words) {
      Word w;
      w.text = text;
      w.bbox = BBox{wx / kPageW, spec.y / page_h, kCharW * text.size() / kPageW,
                    kLineH / page_h};
      w.index = word_index++;
      out.doc.words.push_back(std::move(w));
      wx += kCharW * text.size() + kWordGap;
    }
    line.word_end = word_index - 1;
    line.bbox = BBox{spec.x / kPageW, spec.y / page_h,
                     line_width(spec.words) / kPageW, kLineH / page_h};
    word_range[id] = {line.word_start, line.word_end};
    pg.lines.push_back(std::move(line));
  }
  out.doc.pages.push_back(std::move(pg));

  for (int p = 0; p < profiles; ++p) {
    NamedEntity entity;
    entity.type = kCategory;
    for (int id : built[p].visual) {
      for (int k = word_range[id].first; k <= word_range[id].second; ++k) {
        entity.tokens.push_back(k);
      }
    }
    out.gold.push_back(std::move(entity));
    out.label.entities.push_back(
        LabeledEntity{kCategory, built[p].label_text});
  }
  out.label.doc_id = out.doc.doc_id;

  if (cfg.noise_rate > 0.0) {
    out.doc = corrupt(out.doc, cfg.noise_rate, rng());
  }
  validate_document(out.doc);
  return out;
}

Document corrupt(const Document& doc, double noise_rate, uint64_t seed) {
  if (noise_rate < 0.0 || noise_rate > 1.0) {
    throw ValidationError("noise_rate must be in [0, 1]");
  }
  Document out = doc;
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (Word& word : out.words) {
    for (char& c : word.text) {
      unsigned char uc = static_cast<unsigned char>(c);
      if (!std::isalpha(uc)) continue;
      if (uniform() >= noise_rate) continue;
      char base = std::isupper(uc) ? 'A' : 'a';
      char repl;
      do {
        repl = static_cast<char>(base + pick(rng, 26));
      } while (repl == c);
      c = repl;
    }
  }
  return out;
}

std::vector<std::string> vocabulary() {
  std::vector<std::string> out;
  auto extend = [&out](const std::vector<std::string>& pool) {
    out.insert(out.end(), pool.begin(), pool.end());
  };
  extend(kFirsts);
  extend(kLasts);
  extend(kFirmWords);
  extend(kFirmSuffixes);
  extend(kStreetNames);
  extend(kStreetTypes);
  extend(kCities);
  extend(kStates);
  extend(kParties);
  extend(kDesignationLeads);
  extend(kOrdinals);
  extend({"UNITED", "STATES", "COURT", "OF", "APPEALS", "FOR", "THE",
          "CIRCUIT", "CASE", "NO.", "V.", "PLAINTIFF-APPELLANT,",
          "DEFENDANT-APPELLEE.", "(SBN", "TELEPHONE:", "EMAIL:", "SUITE"});
  return out;
}

}  // namespace synth
}  // namespace paralabel
