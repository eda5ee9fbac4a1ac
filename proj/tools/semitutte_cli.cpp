// Command-line front end for the semitutte shared library. All mathematics
// happens behind the C API; this file only parses arguments, schedules work,
// and renders results.

#include <atomic>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semitutte.h"

namespace {

using nlohmann::ordered_json;

std::string take(char* s) {
  if (s == nullptr) return {};
  std::string out(s);
  stt_string_free(s);
  return out;
}

struct Handle {
  stt_semimatroid* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { stt_semimatroid_free(p); }
};

bool read_file(const std::string& path, std::string& out, std::string& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open " + path;
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// 0 on success; 1 with `err` set otherwise.
int load_from_file(const std::string& path, const std::string& order, Handle& h,
                   std::string& err, stt_status* status_out = nullptr) {
  std::string text;
  if (!read_file(path, text, err)) {
    if (status_out != nullptr) *status_out = STT_ERROR_INPUT;
    return 1;
  }
  char* emsg = nullptr;
  stt_status st = stt_semimatroid_load(
      text.c_str(), order.empty() ? nullptr : order.c_str(), &h.p, &emsg);
  if (status_out != nullptr) *status_out = st;
  if (st != STT_OK) {
    err = take(emsg);
    return 1;
  }
  return 0;
}

struct TaskResult {
  int code = 0;
  std::string out;  // stdout payload
  std::string err;  // stderr payload
};

// Results always land in input order, whatever the completion order.
std::vector<TaskResult> run_tasks(int jobs, int count,
                                  const std::function<TaskResult(int)>& fn) {
  std::vector<TaskResult> results(static_cast<std::size_t>(count));
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  int workers = std::min(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        results[static_cast<std::size_t>(i)] = fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

int emit_results(const std::vector<TaskResult>& results) {
  int code = 0;
  for (const auto& r : results) {
    std::cout << r.out;
    if (!r.err.empty()) std::cerr << r.err;
    code = std::max(code, r.code);
  }
  std::cout.flush();
  return code;
}

std::string set_text(const ordered_json& labels) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels) {
    if (!first) out += ",";
    out += l.get<std::string>();
    first = false;
  }
  return out + "}";
}

std::string indent_lines(const std::string& text, const std::string& pad) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

struct GlobalOpts {
  std::string order;
  std::string format = "text";
  int jobs = 1;

  bool machine() const { return format == "machine"; }
};

// ---- check ----------------------------------------------------------------

int cmd_check(const std::vector<std::string>& files, const GlobalOpts& g) {
  auto results = run_tasks(g.jobs, static_cast<int>(files.size()), [&](int i) {
    const std::string& file = files[static_cast<std::size_t>(i)];
    TaskResult r;
    Handle h;
    std::string err;
    stt_status st = STT_OK;
    if (load_from_file(file, g.order, h, err, &st) != 0) {
      r.code = 1;
      if (g.machine()) {
        ordered_json j{{"file", file},
                       {"ok", false},
                       {"status", stt_status_name(st)},
                       {"error", err}};
        r.out = j.dump(2) + "\n";
      } else {
        r.out = file + ": invalid\n" + indent_lines(err, "  ");
      }
      return r;
    }
    char* doc = nullptr;
    stt_semimatroid_emit(h.p, &doc, nullptr);
    ordered_json parsed = ordered_json::parse(take(doc));
    int central = static_cast<int>(parsed["central"].size());
    if (g.machine()) {
      ordered_json j{{"file", file},
                     {"ok", true},
                     {"n", stt_semimatroid_size(h.p)},
                     {"rank", stt_semimatroid_rank(h.p)},
                     {"central", central}};
      r.out = j.dump(2) + "\n";
    } else {
      r.out = file + ": valid (n=" + std::to_string(stt_semimatroid_size(h.p)) +
              ", rank=" + std::to_string(stt_semimatroid_rank(h.p)) +
              ", central=" + std::to_string(central) + ")\n";
    }
    return r;
  });
  return emit_results(results);
}

// ---- invariant ------------------------------------------------------------

int cmd_invariant(const std::vector<std::string>& files, const std::string& poly,
                  const std::string& route, const GlobalOpts& g) {
  bool many = files.size() > 1;
  auto results = run_tasks(g.jobs, static_cast<int>(files.size()), [&](int i) {
    const std::string& file = files[static_cast<std::size_t>(i)];
    TaskResult r;
    Handle h;
    std::string err;
    if (load_from_file(file, g.order, h, err) != 0) {
      r.code = 1;
      r.err = file + ": " + err + "\n";
      return r;
    }
    char* text = nullptr;
    char* emsg = nullptr;
    stt_status st = stt_invariant(h.p, poly.c_str(), route.c_str(), &text, &emsg);
    if (st != STT_OK) {
      r.code = st == STT_ERROR_USAGE ? 2 : 1;
      r.err = file + ": " + take(emsg) + "\n";
      return r;
    }
    std::string value = take(text);
    if (g.machine()) {
      ordered_json j{{"file", file}, {"poly", poly}, {"route", route}, {"value", value}};
      r.out = j.dump(2) + "\n";
    } else {
      r.out = (many ? file + ": " : std::string()) + value + "\n";
    }
    return r;
  });
  return emit_results(results);
}

// ---- activities -----------------------------------------------------------

std::string activities_text(const ordered_json& a) {
  std::ostringstream out;
  out << "rank " << a["rank"].get<int>() << ", " << a["central_count"].get<int>()
      << " central sets, " << a["bases"].size() << " bases\n";
  for (const auto& b : a["bases"]) {
    out << "basis " << set_text(b["basis"]) << "\n";
    out << "  internally active " << set_text(b["internally_active"]) << "\n";
    out << "  externally active " << set_text(b["externally_active"]) << "\n";
    for (const auto& c : b["fundamental_cocircuits"])
      out << "  fundamental cocircuit of " << c["element"].get<std::string>()
          << ": " << set_text(c["cocircuit"]) << "\n";
    for (const auto& c : b["fundamental_circuits"])
      out << "  fundamental circuit of " << c["element"].get<std::string>()
          << ": " << set_text(c["circuit"]) << "\n";
  }
  out << "intervals\n";
  for (const auto& iv : a["intervals"])
    out << "  [" << set_text(iv["lower"]) << ", " << set_text(iv["upper"])
        << "] from basis " << set_text(iv["basis"]) << "\n";
  return out.str();
}

int cmd_activities(const std::vector<std::string>& files, const GlobalOpts& g) {
  bool many = files.size() > 1;
  auto results = run_tasks(g.jobs, static_cast<int>(files.size()), [&](int i) {
    const std::string& file = files[static_cast<std::size_t>(i)];
    TaskResult r;
    Handle h;
    std::string err;
    if (load_from_file(file, g.order, h, err) != 0) {
      r.code = 1;
      r.err = file + ": " + err + "\n";
      return r;
    }
    char* jtext = nullptr;
    char* emsg = nullptr;
    stt_status st = stt_activities(h.p, &jtext, &emsg);
    if (st != STT_OK) {
      r.code = 1;
      r.err = file + ": " + take(emsg) + "\n";
      return r;
    }
    ordered_json a = ordered_json::parse(take(jtext));
    if (g.machine()) {
      ordered_json j{{"file", file}, {"activities", a}};
      r.out = j.dump(2) + "\n";
    } else {
      r.out = (many ? "== " + file + " ==\n" : std::string()) + activities_text(a);
    }
    return r;
  });
  return emit_results(results);
}

// ---- verify ---------------------------------------------------------------

std::vector<std::string> all_identity_ids() {
  std::vector<std::string> ids;
  std::istringstream in(take(stt_identities()));
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find(' ');
    ids.push_back(pos == std::string::npos ? line : line.substr(0, pos));
  }
  return ids;
}

std::string verify_text(const ordered_json& v) {
  std::ostringstream out;
  int failed = 0;
  for (const auto& rep : v["reports"]) {
    bool pass = rep["pass"].get<bool>();
    out << rep["id"].get<std::string>() << ": " << (pass ? "pass" : "FAIL") << "\n";
    if (!pass) {
      ++failed;
      out << "  lhs  = " << rep["lhs"].get<std::string>() << "\n";
      out << "  rhs  = " << rep["rhs"].get<std::string>() << "\n";
      out << "  diff = " << rep["diff"].get<std::string>() << "\n";
    }
  }
  auto total = v["reports"].size();
  if (failed == 0)
    out << "all " << total << " identities hold\n";
  else
    out << failed << " of " << total << " identities failed\n";
  return out.str();
}

int cmd_verify(const std::vector<std::string>& files, const std::string& identity,
               const GlobalOpts& g) {
  // With --jobs > 1 a full run fans out per identity id; each task then
  // rebuilds its own minor cache, which is the price of parallelism.
  std::vector<std::string> ids;
  if (identity.empty() && g.jobs > 1) ids = all_identity_ids();

  struct Task {
    int file_index;
    std::string id;  // empty = whole battery
  };
  std::vector<Task> tasks;
  for (int f = 0; f < static_cast<int>(files.size()); ++f) {
    if (ids.empty()) {
      tasks.push_back({f, identity});
    } else {
      for (const auto& id : ids) tasks.push_back({f, id});
    }
  }

  struct PerTask {
    int code = 0;
    std::string err;
    ordered_json reports = ordered_json::array();
  };
  std::vector<PerTask> per(tasks.size());

  auto raw = run_tasks(g.jobs, static_cast<int>(tasks.size()), [&](int i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    const std::string& file = files[static_cast<std::size_t>(t.file_index)];
    TaskResult r;
    Handle h;
    std::string err;
    if (load_from_file(file, g.order, h, err) != 0) {
      per[static_cast<std::size_t>(i)].code = 1;
      per[static_cast<std::size_t>(i)].err = file + ": " + err + "\n";
      return r;
    }
    char* jtext = nullptr;
    char* emsg = nullptr;
    stt_status st = stt_verify(h.p, t.id.empty() ? nullptr : t.id.c_str(), &jtext, &emsg);
    if (st != STT_OK && st != STT_ERROR_IDENTITY) {
      per[static_cast<std::size_t>(i)].code = st == STT_ERROR_USAGE ? 2 : 1;
      per[static_cast<std::size_t>(i)].err = file + ": " + take(emsg) + "\n";
      take(jtext);
      return r;
    }
    take(emsg);
    ordered_json v = ordered_json::parse(take(jtext));
    per[static_cast<std::size_t>(i)].code = st == STT_OK ? 0 : 1;
    per[static_cast<std::size_t>(i)].reports = v["reports"];
    return r;
  });
  (void)raw;

  // Reassemble per file, in input order.
  int code = 0;
  bool many = files.size() > 1;
  std::size_t cursor = 0;
  for (int f = 0; f < static_cast<int>(files.size()); ++f) {
    ordered_json reports = ordered_json::array();
    int file_code = 0;
    std::string errs;
    std::size_t per_file = ids.empty() ? 1 : ids.size();
    for (std::size_t k = 0; k < per_file; ++k, ++cursor) {
      const PerTask& p = per[cursor];
      file_code = std::max(file_code, p.code);
      errs += p.err;
      for (const auto& rep : p.reports) reports.push_back(rep);
    }
    code = std::max(code, file_code);
    if (!errs.empty()) {
      std::cerr << errs;
      continue;
    }
    bool all_pass = true;
    for (const auto& rep : reports) all_pass = all_pass && rep["pass"].get<bool>();
    ordered_json v{{"all_pass", all_pass}, {"reports", reports}};
    if (g.machine()) {
      ordered_json j{{"file", files[static_cast<std::size_t>(f)]},
                     {"all_pass", all_pass},
                     {"reports", reports}};
      std::cout << j.dump(2) << "\n";
    } else {
      if (many) std::cout << "== " << files[static_cast<std::size_t>(f)] << " ==\n";
      std::cout << verify_text(v);
    }
  }
  std::cout.flush();
  return code;
}

// ---- random / from-arrangement -------------------------------------------

int summarize_instance(const Handle& h, ordered_json& extra, bool emit,
                       const GlobalOpts& g) {
  char* doc = nullptr;
  char* emsg = nullptr;
  stt_status st = stt_semimatroid_emit(h.p, &doc, &emsg);
  if (st != STT_OK) {
    std::cerr << take(emsg) << "\n";
    return 1;
  }
  std::string doc_text = take(doc);
  if (emit) {
    std::cout << doc_text << "\n";
    return 0;
  }
  int central = static_cast<int>(ordered_json::parse(doc_text)["central"].size());
  extra["n"] = stt_semimatroid_size(h.p);
  extra["rank"] = stt_semimatroid_rank(h.p);
  extra["central"] = central;
  if (g.machine()) {
    std::cout << extra.dump(2) << "\n";
  } else {
    std::string line;
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      if (!line.empty()) line += " ";
      line += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
    }
    std::cout << line << "\n";
  }
  return 0;
}

int cmd_random(std::uint64_t seed, int n, int d, long bound, bool emit,
               const GlobalOpts& g) {
  Handle h;
  char* emsg = nullptr;
  stt_status st = stt_semimatroid_random(seed, n, d, bound, &h.p, &emsg);
  if (st != STT_OK) {
    std::cerr << take(emsg) << "\n";
    return 1;
  }
  if (!g.order.empty()) {
    Handle reordered;
    st = stt_semimatroid_reorder(h.p, g.order.c_str(), &reordered.p, &emsg);
    if (st != STT_OK) {
      std::cerr << take(emsg) << "\n";
      return 1;
    }
    std::swap(h.p, reordered.p);
  }
  ordered_json extra{{"seed", seed}, {"d", d}, {"bound", bound}};
  return summarize_instance(h, extra, emit, g);
}

int cmd_from_arrangement(const std::string& file, bool emit, const GlobalOpts& g) {
  Handle h;
  std::string err;
  if (load_from_file(file, g.order, h, err) != 0) {
    std::cerr << file << ": " << err << "\n";
    return 1;
  }
  ordered_json extra{{"file", file}};
  return summarize_instance(h, extra, emit, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact semimatroid invariants and identity checks"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--order", g.order, "comma-separated ground order override");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for multiple files/identities")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> files;
  std::string poly = "tutte";
  std::string route = "sum";
  std::string identity;
  bool verify_all = false;
  bool emit = false;
  std::uint64_t seed = 0;
  int rand_n = 0;
  int rand_d = 2;
  long rand_bound = 3;

  CLI::App* check = app.add_subcommand("check", "validate the axioms");
  check->add_option("files", files, "instance documents")->required()->expected(-1);

  CLI::App* invariant = app.add_subcommand("invariant", "evaluate a polynomial invariant");
  invariant->add_option("files", files, "instance documents")->required()->expected(-1);
  invariant->add_option("--poly", poly, "polynomial")
      ->check(CLI::IsMember({"z", "dichromatic", "tutte", "characteristic",
                             "subset-corank", "size-corank", "rank-gen"}))
      ->capture_default_str();
  invariant->add_option("--route", route, "evaluation route")
      ->check(CLI::IsMember({"sum", "dc", "activities", "viaz", "all"}))
      ->capture_default_str();

  CLI::App* activities = app.add_subcommand("activities", "per-basis activities and intervals");
  activities->add_option("files", files, "instance documents")->required()->expected(-1);

  CLI::App* verify = app.add_subcommand("verify", "check the polynomial identities");
  verify->add_option("files", files, "instance documents")->required()->expected(-1);
  CLI::Option* oid = verify->add_option("--identity", identity, "run one identity by id");
  verify->add_flag("--all", verify_all, "run every identity (default)")->excludes(oid);

  CLI::App* random = app.add_subcommand("random", "seeded random arrangement instance");
  random->add_option("--seed", seed, "64-bit seed")->required();
  random->add_option("--n", rand_n, "hyperplane count")->required();
  random->add_option("--d", rand_d, "ambient dimension")->capture_default_str();
  random->add_option("--bound", rand_bound, "coefficient bound")->capture_default_str();
  random->add_flag("--emit", emit, "print the explicit document");

  CLI::App* from_arr = app.add_subcommand("from-arrangement", "build from an arrangement document");
  from_arr->add_option("file", files, "arrangement document")->required()->expected(1);
  from_arr->add_flag("--emit", emit, "print the explicit document");

  for (CLI::App* sub : {check, invariant, activities, verify, random, from_arr})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (check->parsed()) return cmd_check(files, g);
  if (invariant->parsed()) return cmd_invariant(files, poly, route, g);
  if (activities->parsed()) return cmd_activities(files, g);
  if (verify->parsed()) return cmd_verify(files, identity, g);
  if (random->parsed()) return cmd_random(seed, rand_n, rand_d, rand_bound, emit, g);
  if (from_arr->parsed()) return cmd_from_arrangement(files.front(), emit, g);
  return 2;
}
