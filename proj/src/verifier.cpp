#include "mstep/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>
#include <tuple>

#include "claims.hpp"
#include "json.hpp"
#include "mstep/enumeration.hpp"
#include "mstep/error.hpp"
#include "mstep/io.hpp"

namespace mstep {

namespace {

using nlohmann::json;

constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
constexpr std::uint64_t kSampleChunk = 256;

auto instance_key(const Counterexample& c) {
  const auto rows = c.digraph.out_rows();
  return std::make_tuple(c.digraph.order(), c.index, c.m, c.params,
                         std::vector<Word>(rows.begin(), rows.end()));
}

void sort_and_truncate(std::vector<Counterexample>& list) {
  std::sort(list.begin(), list.end(), [](const Counterexample& a, const Counterexample& b) {
    return instance_key(a) < instance_key(b);
  });
  if (list.size() > kMaxStoredInstances) {
    list.erase(list.begin() + kMaxStoredInstances, list.end());
  }
}

void store(std::vector<Counterexample>& list, Counterexample entry) {
  list.push_back(std::move(entry));
  if (list.size() > 2 * kMaxStoredInstances) sort_and_truncate(list);
}

std::uint64_t smallest_m(const claims::Claim& claim) {
  std::uint64_t low = UINT64_MAX;
  for (const auto& d : claim.directions) low = std::min(low, d.boundary_from.value_or(d.min_m));
  return low;
}

enum class Role { Skip, Normal, Boundary };

Role role(const claims::Direction& d, std::uint64_t m, bool m_independent) {
  if (m_independent || m >= d.min_m) return Role::Normal;
  if (d.boundary_from && m >= *d.boundary_from) return Role::Boundary;
  return Role::Skip;
}

// One claim to verify, with its validated m values ({0} when m-independent).
struct Plan {
  const claims::Claim* claim;
  std::vector<std::uint64_t> m_values;
};

std::vector<Plan> make_plans(std::span<const std::string> ids, const VerifyOptions& options) {
  if (ids.empty()) throw InputError("no claims requested");
  if (options.workers == 0) throw InputError("workers must be at least 1");
  for (std::uint64_t m : options.m_values) {
    if (m == 0) throw InputError("step count m must be positive");
  }
  std::vector<Plan> plans;
  bool stream = false;
  for (const std::string& id : ids) {
    const claims::Claim& claim = claims::find(id);
    stream = stream || claim.has_stream_directions();
    Plan plan{&claim, {}};
    if (claim.m_independent) {
      plan.m_values = {0};
    } else {
      if (options.m_values.empty()) throw InputError(id + " needs at least one m value");
      const std::uint64_t low = smallest_m(claim);
      for (std::uint64_t m : options.m_values) {
        if (m < low) {
          throw InputError(id + " does not apply at m = " + std::to_string(m) +
                           " (needs m >= " + std::to_string(low) + ")");
        }
      }
      plan.m_values = options.m_values;
      std::sort(plan.m_values.begin(), plan.m_values.end());
      plan.m_values.erase(std::unique(plan.m_values.begin(), plan.m_values.end()),
                          plan.m_values.end());
    }
    plans.push_back(std::move(plan));
  }
  if (stream) {
    if (options.n_max < 2) throw InputError("n_max must be at least 2");
    if (options.mode == Mode::Exhaustive) {
      if (options.n_max > kDefaultOrderLimit && !options.large) {
        throw InputError("exhaustive runs above n = " + std::to_string(kDefaultOrderLimit) +
                         " need the large option");
      }
      if (options.n_max > DigraphStream::kMaxOrder) {
        throw InputError("exhaustive runs are limited to n <= " +
                         std::to_string(DigraphStream::kMaxOrder));
      }
    } else if (options.samples == 0) {
      throw InputError("sampled runs need at least one sample");
    }
  }
  return plans;
}

VerificationReport empty_report(const Plan& plan, const VerifyOptions& options) {
  const claims::Claim& claim = *plan.claim;
  VerificationReport r;
  r.claim = claim.id;
  r.statement = claim.statement;
  r.mode = options.mode;
  r.n_max = options.n_max;
  r.seed = options.seed;
  r.samples = options.mode == Mode::Sampled ? options.samples : 0;
  if (!claim.m_independent) r.m_values = plan.m_values;
  for (const auto& d : claim.directions) {
    DirectionReport dr;
    dr.name = d.name;
    if (!claim.m_independent) {
      for (std::uint64_t m : plan.m_values) {
        if (role(d, m, false) == Role::Normal) dr.m_values.push_back(m);
      }
    }
    r.directions.push_back(std::move(dr));
  }
  return r;
}

// Per-worker state: partial reports and evaluation contexts, one per plan.
struct Worker {
  std::vector<VerificationReport> reports;
  std::vector<claims::Context> contexts;

  Worker(const std::vector<Plan>& plans, const VerifyOptions& options) {
    for (const Plan& p : plans) {
      reports.push_back(empty_report(p, options));
      contexts.emplace_back(p.m_values);
    }
  }
};

void evaluate(const claims::Claim& claim, const claims::Direction& dir, DirectionReport& out,
              claims::Subject& subject, std::uint64_t m, const Params& params,
              claims::Context& ctx, std::uint64_t index, Role r) {
  const claims::Outcome o = dir.evaluate(subject, m, params, ctx);
  if (r == Role::Normal) {
    ++out.instances;
    if (o.hypothesis) ++out.hypothesis_hits;
    if (!o.tally.empty()) ++out.tallies[o.tally];
  }
  if (!o.hypothesis || o.conclusion) return;
  Counterexample c{claim.id, dir.name, m, subject.digraph(), params, index, o.detail};
  if (r == Role::Normal) {
    ++out.counterexample_count;
    store(out.counterexamples, std::move(c));
  } else {
    ++out.boundary_count;
    store(out.boundary_instances, std::move(c));
  }
}

void scan_digraph(const std::vector<Plan>& plans, Worker& w, const Digraph& d,
                  std::uint64_t index) {
  claims::Subject subject(d);
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const claims::Claim& claim = *plans[i].claim;
    if (!claim.has_stream_directions()) continue;
    ++w.reports[i].digraphs_examined;
    for (std::size_t j = 0; j < claim.directions.size(); ++j) {
      const claims::Direction& dir = claim.directions[j];
      if (dir.family) continue;
      for (std::uint64_t m : plans[i].m_values) {
        const Role r = role(dir, m, claim.m_independent);
        if (r == Role::Skip) continue;
        for (const Params& params : dir.expand(subject, m, w.contexts[i])) {
          evaluate(claim, dir, w.reports[i].directions[j], subject, m, params, w.contexts[i],
                   index, r);
        }
      }
    }
  }
}

void scan_families(const std::vector<Plan>& plans, Worker& w, const VerifyOptions& options) {
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const claims::Claim& claim = *plans[i].claim;
    if (!claim.family) continue;
    const auto members = claim.family(options);
    w.reports[i].digraphs_examined += members.size();
    for (std::size_t k = 0; k < members.size(); ++k) {
      claims::Subject subject(members[k].digraph);
      for (std::size_t j = 0; j < claim.directions.size(); ++j) {
        const claims::Direction& dir = claim.directions[j];
        if (!dir.family) continue;
        for (std::uint64_t m : plans[i].m_values) {
          const Role r = role(dir, m, claim.m_independent);
          if (r == Role::Skip) continue;
          evaluate(claim, dir, w.reports[i].directions[j], subject, m, members[k].params,
                   w.contexts[i], k, r);
        }
      }
    }
  }
}

Digraph sample_digraph(const VerifyOptions& options, std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
  std::mt19937_64 rng(seq);
  const std::size_t n = 1 + rng() % options.n_max;
  const std::size_t words = words_for(n);
  const std::size_t tail = n % kWordBits;
  const Word tail_mask = tail == 0 ? ~Word{0} : (Word{1} << tail) - 1;
  std::vector<Word> rows(n * words, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::span<Word> row(rows.data() + v * words, words);
    do {
      for (Word& w : row) w = rng();
      row.back() &= tail_mask;
    } while (!bits::any(row));
  }
  return Digraph::from_rows(n, rows);
}

struct WorkItem {
  std::size_t n;  // 0 in sampled mode
  std::uint64_t first;
  std::uint64_t last;
};

std::vector<WorkItem> work_items(const VerifyOptions& options) {
  std::vector<WorkItem> items;
  if (options.mode == Mode::Sampled) {
    for (std::uint64_t s = 0; s < options.samples; s += kSampleChunk) {
      items.push_back({0, s, s + std::min(kSampleChunk, options.samples - s)});
    }
    return items;
  }
  for (std::size_t n = 1; n <= options.n_max; ++n) {
    const std::uint64_t size = DigraphStream::space_size(n);
    for (std::uint64_t first = 0; first < size; first += std::min(kChunk, size - first)) {
      items.push_back({n, first, first + std::min(kChunk, size - first)});
    }
  }
  return items;
}

void run_item(const std::vector<Plan>& plans, Worker& w, const VerifyOptions& options,
              const WorkItem& item) {
  if (item.n == 0) {
    for (std::uint64_t s = item.first; s < item.last; ++s) {
      scan_digraph(plans, w, sample_digraph(options, s), s);
    }
    return;
  }
  DigraphStream stream(item.n, item.first, item.last);
  while (auto d = stream.next()) scan_digraph(plans, w, *d, stream.index());
}

void merge_direction(DirectionReport& a, const DirectionReport& b) {
  a.instances += b.instances;
  a.hypothesis_hits += b.hypothesis_hits;
  a.counterexample_count += b.counterexample_count;
  a.counterexamples.insert(a.counterexamples.end(), b.counterexamples.begin(),
                           b.counterexamples.end());
  sort_and_truncate(a.counterexamples);
  a.boundary_count += b.boundary_count;
  a.boundary_instances.insert(a.boundary_instances.end(), b.boundary_instances.begin(),
                              b.boundary_instances.end());
  sort_and_truncate(a.boundary_instances);
  for (const auto& [key, count] : b.tallies) a.tallies[key] += count;
}

const char* mode_name(Mode mode) { return mode == Mode::Exhaustive ? "exhaustive" : "sampled"; }

json params_json(const Params& params) {
  json out = json::object();
  for (const auto& [key, value] : params) out[key] = value;
  return out;
}

json counterexample_json(const Counterexample& c) {
  return {{"claim", c.claim},
          {"direction", c.direction},
          {"n", c.digraph.order()},
          {"index", c.index},
          {"m", c.m},
          {"digraph", to_edge_list(c.digraph)},
          {"params", params_json(c.params)},
          {"detail", c.detail}};
}

Counterexample counterexample_from(const json& j) {
  if (!j.is_object()) throw InputError("counterexample must be a JSON object");
  try {
    Counterexample c{j.at("claim").get<std::string>(),
                     j.at("direction").get<std::string>(),
                     j.at("m").get<std::uint64_t>(),
                     parse_digraph(j.at("digraph").get<std::string>()),
                     {},
                     0,
                     {}};
    if (j.contains("params")) {
      for (const auto& [key, value] : j.at("params").items()) {
        c.params[key] = value.get<std::int64_t>();
      }
    }
    c.index = j.value("index", std::uint64_t{0});
    c.detail = j.value("detail", std::string{});
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed counterexample: ") + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

bool VerificationReport::verified() const { return counterexample_count() == 0; }

std::uint64_t VerificationReport::counterexample_count() const {
  std::uint64_t total = 0;
  for (const auto& d : directions) total += d.counterexample_count;
  return total;
}

const DirectionReport& VerificationReport::direction(std::string_view name) const {
  for (const auto& d : directions) {
    if (d.name == name) return d;
  }
  throw InputError(claim + " has no direction '" + std::string(name) + "'");
}

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : claims::catalog()) {
      ClaimInfo info{c.id, c.statement, c.m_independent, {}};
      for (const auto& d : c.directions) info.directions.push_back({d.name, d.min_m});
      out.push_back(std::move(info));
    }
    return out;
  }();
  return infos;
}

const ClaimInfo& claim_info(std::string_view id) {
  const claims::Claim& claim = claims::find(id);
  for (const auto& info : claim_catalog()) {
    if (info.id == claim.id) return info;
  }
  throw InputError("unknown claim '" + std::string(id) + "'");
}

std::vector<std::uint64_t> valid_m_values(std::string_view id,
                                          std::span<const std::uint64_t> requested) {
  const claims::Claim& claim = claims::find(id);
  const std::uint64_t low = claim.m_independent ? 1 : smallest_m(claim);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : requested) {
    if (m >= low) out.push_back(m);
  }
  return out;
}

std::vector<VerificationReport> verify_claims(std::span<const std::string> ids,
                                              const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Plan> plans = make_plans(ids, options);
  const bool stream = std::any_of(plans.begin(), plans.end(), [](const Plan& p) {
    return p.claim->has_stream_directions();
  });

  std::vector<Worker> workers;
  for (unsigned i = 0; i < options.workers; ++i) workers.emplace_back(plans, options);

  if (stream) {
    const std::vector<WorkItem> items = work_items(options);
    std::atomic<std::size_t> next{0};
    auto body = [&](Worker& w) {
      for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
        run_item(plans, w, options, items[i]);
      }
    };
    if (options.workers == 1) {
      body(workers[0]);
    } else {
      std::vector<std::thread> threads;
      for (auto& w : workers) threads.emplace_back(body, std::ref(w));
      for (auto& t : threads) t.join();
    }
  }
  scan_families(plans, workers[0], options);

  std::vector<VerificationReport> reports = workers[0].reports;
  for (std::size_t w = 1; w < workers.size(); ++w) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      reports[i] = merge_reports(std::move(reports[i]), workers[w].reports[i]);
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : reports) {
    for (auto& d : r.directions) {
      sort_and_truncate(d.counterexamples);
      sort_and_truncate(d.boundary_instances);
    }
    r.elapsed_seconds = elapsed;
  }
  return reports;
}

VerificationReport verify_claim(std::string_view id, const VerifyOptions& options) {
  const std::string ids[] = {std::string(id)};
  return verify_claims(ids, options).front();
}

VerificationReport merge_reports(VerificationReport a, const VerificationReport& b) {
  if (a.claim != b.claim || a.directions.size() != b.directions.size()) {
    throw InputError("cannot merge reports of different claims");
  }
  a.digraphs_examined += b.digraphs_examined;
  a.elapsed_seconds = std::max(a.elapsed_seconds, b.elapsed_seconds);
  for (std::size_t i = 0; i < a.directions.size(); ++i) {
    merge_direction(a.directions[i], b.directions[i]);
  }
  return a;
}

bool replay_counterexample(const Counterexample& entry) {
  const claims::Claim& claim = claims::find(entry.claim);
  const claims::Direction* dir = nullptr;
  for (const auto& d : claim.directions) {
    if (d.name == entry.direction) dir = &d;
  }
  if (dir == nullptr) {
    throw InputError(entry.claim + " has no direction '" + entry.direction + "'");
  }
  if (!claim.m_independent && entry.m == 0) {
    throw InputError(entry.claim + " needs a positive m");
  }
  claims::Subject subject(entry.digraph);
  claims::Context ctx({entry.m});
  const claims::Outcome o = dir->evaluate(subject, entry.m, entry.params, ctx);
  return o.hypothesis && !o.conclusion;
}

std::string to_json(const Counterexample& entry) { return counterexample_json(entry).dump(); }

Counterexample counterexample_from_json(std::string_view text) {
  return counterexample_from(parse_json(text));
}

std::string to_json_line(const VerificationReport& r) {
  json directions = json::array();
  for (const auto& d : r.directions) {
    json ces = json::array();
    for (const auto& c : d.counterexamples) ces.push_back(counterexample_json(c));
    json boundary = json::array();
    for (const auto& c : d.boundary_instances) boundary.push_back(counterexample_json(c));
    directions.push_back({{"name", d.name},
                          {"m_values", d.m_values},
                          {"instances", d.instances},
                          {"hypothesis_hits", d.hypothesis_hits},
                          {"counterexample_count", d.counterexample_count},
                          {"counterexamples", std::move(ces)},
                          {"boundary_count", d.boundary_count},
                          {"boundary_instances", std::move(boundary)},
                          {"tallies", d.tallies}});
  }
  json out = {{"claim", r.claim},
              {"statement", r.statement},
              {"mode", mode_name(r.mode)},
              {"n_min", r.n_min},
              {"n_max", r.n_max},
              {"m_values", r.m_values},
              {"seed", r.seed},
              {"samples", r.samples},
              {"digraphs_examined", r.digraphs_examined},
              {"verified", r.verified()},
              {"counterexample_count", r.counterexample_count()},
              {"directions", std::move(directions)},
              {"elapsed_seconds", r.elapsed_seconds}};
  return out.dump();
}

std::vector<Counterexample> counterexamples_from_json_line(std::string_view line,
                                                           bool include_boundary) {
  const json j = parse_json(line);
  if (!j.is_object()) throw InputError("expected a JSON object");
  std::vector<Counterexample> out;
  if (!j.contains("directions")) {
    out.push_back(counterexample_from(j));
    return out;
  }
  try {
    for (const auto& d : j.at("directions")) {
      for (const auto& c : d.at("counterexamples")) out.push_back(counterexample_from(c));
      if (include_boundary && d.contains("boundary_instances")) {
        for (const auto& c : d.at("boundary_instances")) out.push_back(counterexample_from(c));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace mstep
