#include "braidmono/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace braidmono {

namespace {

constexpr const char* kCheckpointMagic = "braidmono-checkpoint v1";
constexpr const char* kComposeTag = "left-to-right";
constexpr const char* kCommutatorTag = "xyXY";

std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Perm> all_perms_lex(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Search tables for one fixed branching transposition sigma.
//
// X is the R2 candidate set (sorted); comm is an |X| x |X| bit matrix with
// bit (i, j) set iff conjugate(X[i], sigma) commutes with X[j]. Because
// sigma is an involution, the ten non-TR relations all reduce to membership
// in comm rows:
//   R2  (x in X):        bit (x, x)
//   R4a / R4b:           b1 in comm[a1],  b2 in comm[a2]
//   R3a / R3d:           a2 in comm[a1] & comm[b1]
//   R3b / R3c:           b2 in comm[b1] & comm[a1]
// TR is checked pointwise against the closure target
// [a2, b2^-1] = [a1, b1^-1]^-1 sigma^2.
struct Tables {
  int n = 0;
  Perm sigma;
  std::vector<Perm> X;
  int m = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> comm;  // m rows of `words` 64-bit words
  std::vector<int> xflat;           // m*n images
  std::vector<int> xinvflat;        // m*n inverse images
  std::vector<int> sig;             // sigma images
  std::vector<int> sig2;            // sigma^2 images

  const std::uint64_t* row(int i) const { return comm.data() + i * words; }
  const int* x(int i) const { return xflat.data() + i * n; }
  const int* xinv(int i) const { return xinvflat.data() + i * n; }
};

Tables build_tables(const Perm& sigma) {
  Tables t;
  t.n = sigma.degree();
  t.sigma = sigma;
  t.X = r2_candidates(sigma);
  t.m = static_cast<int>(t.X.size());
  t.words = (t.m + 63) / 64;
  t.sig = sigma.images();
  t.sig2 = compose(sigma, sigma).images();

  t.xflat.resize(static_cast<std::size_t>(t.m) * t.n);
  t.xinvflat.resize(static_cast<std::size_t>(t.m) * t.n);
  std::vector<std::vector<int>> conj(t.m);
  for (int i = 0; i < t.m; ++i) {
    const Perm inv = inverse(t.X[i]);
    for (int p = 0; p < t.n; ++p) {
      t.xflat[static_cast<std::size_t>(i) * t.n + p] = t.X[i][p];
      t.xinvflat[static_cast<std::size_t>(i) * t.n + p] = inv[p];
    }
    conj[i] = conjugate(t.X[i], sigma).images();
  }

  t.comm.assign(static_cast<std::size_t>(t.m) * t.words, 0);
  for (int i = 0; i < t.m; ++i) {
    const int* c = conj[i].data();
    std::uint64_t* row = t.comm.data() + static_cast<std::size_t>(i) * t.words;
    for (int j = 0; j < t.m; ++j) {
      const int* xj = t.x(j);
      bool ok = true;
      for (int p = 0; p < t.n; ++p) {
        if (c[xj[p]] != xj[c[p]]) {
          ok = false;
          break;
        }
      }
      if (ok) row[j / 64] |= 1ULL << (j % 64);
    }
  }
  return t;
}

struct Scratch {
  std::vector<std::uint64_t> row_a2;
  std::vector<int> target;    // TR closure target
  std::vector<char> seen;
  std::vector<int> stack;

  void fit(const Tables& t) {
    row_a2.resize(t.words);
    target.resize(t.n);
    seen.resize(t.n);
    stack.resize(t.n);
  }
};

bool joint_image_transitive(const Tables& t, const int* a1, const int* a2, const int* b1,
                            const int* b2, Scratch& s) {
  const int n = t.n;
  std::memset(s.seen.data(), 0, n);
  s.seen[0] = 1;
  s.stack[0] = 0;
  int sp = 1, count = 1;
  const int* gens[5] = {t.sig.data(), a1, a2, b1, b2};
  while (sp > 0) {
    int p = s.stack[--sp];
    for (const int* g : gens) {
      int q = g[p];
      if (!s.seen[q]) {
        s.seen[q] = 1;
        ++count;
        s.stack[sp++] = q;
      }
    }
  }
  return count == n;
}

// Exhausts the subtree rooted at a1: b1 filtered by R4a, a2 by R3a+R3d,
// b2 by R3b+R3c+R4b, then the TR target equation and transitivity.
void process_unit(const Tables& t, int a1, std::vector<MonodromyRep>& out, Scratch& s) {
  s.fit(t);
  const int n = t.n;
  const std::uint64_t* row_a1 = t.row(a1);
  const int* xa1 = t.x(a1);
  const int* xinva1 = t.xinv(a1);

  for (std::size_t w1 = 0; w1 < t.words; ++w1) {
    std::uint64_t bits1 = row_a1[w1];
    while (bits1) {
      const int b1 = static_cast<int>(w1 * 64) + std::countr_zero(bits1);
      bits1 &= bits1 - 1;
      const int* xb1 = t.x(b1);
      const int* xinvb1 = t.xinv(b1);

      // target = [a1, b1^-1]^-1 sigma^2, so TR becomes [a2, b2^-1] == target
      for (int p = 0; p < n; ++p) {
        int c = xb1[xinva1[xinvb1[xa1[p]]]];  // [a1, b1^-1] applied to p
        s.target[c] = t.sig2[p];
      }

      const std::uint64_t* row_b1 = t.row(b1);
      for (std::size_t w = 0; w < t.words; ++w) s.row_a2[w] = row_a1[w] & row_b1[w];

      for (std::size_t w2 = 0; w2 < t.words; ++w2) {
        std::uint64_t bits2 = s.row_a2[w2];
        while (bits2) {
          const int a2 = static_cast<int>(w2 * 64) + std::countr_zero(bits2);
          bits2 &= bits2 - 1;
          const int* xa2 = t.x(a2);
          const int* xinva2 = t.xinv(a2);
          const std::uint64_t* row_a2g = t.row(a2);

          for (std::size_t w3 = 0; w3 < t.words; ++w3) {
            std::uint64_t bits3 = s.row_a2[w3] & row_a2g[w3];
            while (bits3) {
              const int b2 = static_cast<int>(w3 * 64) + std::countr_zero(bits3);
              bits3 &= bits3 - 1;
              const int* xb2 = t.x(b2);
              const int* xinvb2 = t.xinv(b2);

              bool tr_ok = true;
              for (int p = 0; p < n; ++p) {
                if (xb2[xinva2[xinvb2[xa2[p]]]] != s.target[p]) {
                  tr_ok = false;
                  break;
                }
              }
              if (!tr_ok) continue;
              if (!joint_image_transitive(t, xa1, xa2, xb1, xb2, s)) continue;
              out.push_back(MonodromyRep{n, t.sigma, t.X[a1], t.X[a2], t.X[b1], t.X[b2]});
            }
          }
        }
      }
    }
  }
}

struct CheckpointRecord {
  std::uint64_t count = 0;
  std::uint64_t digest = 0;
};

struct CheckpointData {
  int degree = 0;
  bool fix_sigma = true;
  std::uint64_t candidates_digest = 0;
  std::size_t units = 0;
  std::vector<std::optional<CheckpointRecord>> done;  // indexed by unit
};

std::uint64_t parse_hex64(const std::string& s) {
  if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
    throw CheckpointError("corrupt checkpoint: bad digest field '" + s + "'");
  return std::stoull(s, nullptr, 16);
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

CheckpointData read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string content = ss.str();

  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string::npos) break;  // torn final append: ignore the fragment
    lines.push_back(content.substr(pos, nl - pos));
    pos = nl + 1;
  }

  auto expect_kv = [&](std::size_t idx, const std::string& key) -> std::string {
    if (idx >= lines.size() || lines[idx].rfind(key + " ", 0) != 0)
      throw CheckpointError("corrupt checkpoint: expected '" + key + "' line");
    return lines[idx].substr(key.size() + 1);
  };

  if (lines.empty() || lines[0] != kCheckpointMagic)
    throw CheckpointError("not a braidmono checkpoint (bad magic line): " + path.string());

  CheckpointData data;
  try {
    data.degree = std::stoi(expect_kv(1, "degree"));
    data.fix_sigma = expect_kv(2, "fix_sigma") == "1";
    const std::string compose_tag = expect_kv(3, "compose");
    const std::string comm_tag = expect_kv(4, "commutator");
    if (compose_tag != kComposeTag || comm_tag != kCommutatorTag)
      throw CheckpointError("checkpoint convention tags (" + compose_tag + ", " + comm_tag +
                            ") do not match this build (" + kComposeTag + ", " + kCommutatorTag +
                            "); counts would silently differ");
    data.candidates_digest = parse_hex64(expect_kv(5, "candidates"));
    data.units = std::stoull(expect_kv(6, "units"));
  } catch (const CheckpointError&) {
    throw;
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("corrupt checkpoint header: ") + e.what());
  }
  data.done.assign(data.units, std::nullopt);

  for (std::size_t i = 7; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string word, digest;
    std::size_t unit;
    std::uint64_t count;
    if (!(ls >> word >> unit >> count >> digest) || word != "done" || !(ls >> std::ws).eof())
      throw CheckpointError("corrupt checkpoint: bad record on line " + std::to_string(i + 1));
    if (unit >= data.units)
      throw CheckpointError("corrupt checkpoint: partition index " + std::to_string(unit) +
                            " out of range");
    if (data.done[unit])
      throw CheckpointError("corrupt checkpoint: duplicate record for partition " +
                            std::to_string(unit));
    data.done[unit] = CheckpointRecord{count, parse_hex64(digest)};
  }
  return data;
}

struct RunParams {
  int degree = 0;
  bool fix_sigma = true;
  int worker_count = 1;
  int checkpoint_interval = 64;
  std::optional<std::uint64_t> limit;
  std::filesystem::path checkpoint_path;
  bool resuming = false;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> on_progress;
};

EnumerationResult run_search(const RunParams& params) {
  if (params.degree < 1) throw std::invalid_argument("enumerate: degree must be >= 1");
  if (params.worker_count < 1) throw std::invalid_argument("enumerate: worker_count must be >= 1");
  if (params.checkpoint_interval < 1)
    throw std::invalid_argument("enumerate: checkpoint_interval must be >= 1");

  const auto t0 = std::chrono::steady_clock::now();
  const int n = params.degree;

  EnumerationResult result;
  result.degree = n;
  result.fix_sigma = params.fix_sigma;

  // Degree 1 has no transpositions, hence no generic representations.
  std::vector<Tables> tables;
  if (n >= 2) {
    if (params.fix_sigma) {
      tables.push_back(build_tables(Perm::transposition(n, 0, 1)));
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          tables.push_back(build_tables(Perm::transposition(n, i, j)));
    }
  }

  // One partition per (sigma, a1) root.
  std::vector<std::size_t> table_offset(tables.size() + 1, 0);
  for (std::size_t ti = 0; ti < tables.size(); ++ti)
    table_offset[ti + 1] = table_offset[ti] + tables[ti].m;
  const std::size_t unit_count = table_offset.back();

  std::uint64_t candidates_digest = fnv1a64("");
  for (const Tables& t : tables) {
    candidates_digest = fnv1a64(t.sigma.to_one_line() + "\n", candidates_digest);
    for (const Perm& x : t.X) candidates_digest = fnv1a64(x.to_one_line() + "\n", candidates_digest);
  }

  std::vector<std::optional<CheckpointRecord>> prior(unit_count, std::nullopt);
  if (params.resuming) {
    CheckpointData data = read_checkpoint(params.checkpoint_path);
    if (data.degree != n)
      throw CheckpointError("checkpoint degree " + std::to_string(data.degree) +
                            " does not match requested degree " + std::to_string(n));
    if (data.fix_sigma != params.fix_sigma)
      throw CheckpointError("checkpoint fix_sigma flag does not match");
    if (data.units != unit_count)
      throw CheckpointError("checkpoint partition count " + std::to_string(data.units) +
                            " does not match search plan (" + std::to_string(unit_count) + ")");
    if (data.candidates_digest != candidates_digest)
      throw CheckpointError("checkpoint candidate-set digest does not match this build");
    prior = std::move(data.done);
  }

  std::ofstream cp_out;
  const bool checkpointing = !params.checkpoint_path.empty();
  if (checkpointing && !params.resuming) {
    if (std::filesystem::exists(params.checkpoint_path))
      throw CheckpointError("checkpoint file already exists (resume it instead): " +
                            params.checkpoint_path.string());
    cp_out.open(params.checkpoint_path, std::ios::binary);
    if (!cp_out) throw CheckpointError("cannot create checkpoint file: " +
                                       params.checkpoint_path.string());
    cp_out << kCheckpointMagic << "\n"
           << "degree " << n << "\n"
           << "fix_sigma " << (params.fix_sigma ? 1 : 0) << "\n"
           << "compose " << kComposeTag << "\n"
           << "commutator " << kCommutatorTag << "\n"
           << "candidates " << hex64(candidates_digest) << "\n"
           << "units " << unit_count << "\n";
    cp_out.flush();
    if (!cp_out) throw CheckpointError("checkpoint header write failed: " +
                                       params.checkpoint_path.string());
  } else if (checkpointing) {
    cp_out.open(params.checkpoint_path, std::ios::binary | std::ios::app);
    if (!cp_out) throw CheckpointError("cannot append to checkpoint file: " +
                                       params.checkpoint_path.string());
  }

  std::vector<std::vector<MonodromyRep>> slots(unit_count);
  std::vector<std::uint64_t> unit_counts(unit_count, 0);
  std::size_t done_units = 0;
  for (std::size_t u = 0; u < unit_count; ++u) {
    if (prior[u]) {
      unit_counts[u] = prior[u]->count;
      ++done_units;
    }
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::uint64_t emitted = 0;
  int unflushed = 0;
  std::exception_ptr error;

  if (params.limit && *params.limit == 0) stop.store(true);

  auto unit_table = [&](std::size_t u) {
    std::size_t ti = 0;
    while (table_offset[ti + 1] <= u) ++ti;
    return ti;
  };

  auto worker = [&]() {
    Scratch scratch;
    try {
      while (!stop.load(std::memory_order_relaxed)) {
        const std::size_t u = next.fetch_add(1);
        if (u >= unit_count) break;
        if (prior[u]) continue;
        const std::size_t ti = unit_table(u);
        const int a1 = static_cast<int>(u - table_offset[ti]);
        std::vector<MonodromyRep>& out = slots[u];
        process_unit(tables[ti], a1, out, scratch);

        std::uint64_t digest = 0;
        for (const MonodromyRep& rep : out) digest ^= rep_digest(rep);

        std::lock_guard<std::mutex> lk(mu);
        if (error) break;
        unit_counts[u] = out.size();
        emitted += out.size();
        ++done_units;
        if (checkpointing) {
          cp_out << "done " << u << ' ' << out.size() << ' ' << hex64(digest) << "\n";
          if (++unflushed >= params.checkpoint_interval) {
            cp_out.flush();
            unflushed = 0;
            if (!cp_out) {
              error = std::make_exception_ptr(
                  CheckpointError("checkpoint write failed at partition " + std::to_string(u)));
              stop.store(true);
              break;
            }
          }
        }
        if (params.on_progress) params.on_progress(done_units, unit_count, emitted);
        if (params.limit && emitted >= *params.limit && done_units < unit_count)
          stop.store(true);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu);
      if (!error) error = std::current_exception();
      stop.store(true);
    }
  };

  {
    std::vector<std::thread> threads;
    const int nthreads = std::min<std::size_t>(params.worker_count,
                                               std::max<std::size_t>(unit_count, 1));
    threads.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) threads.emplace_back(worker);
    for (std::thread& th : threads) th.join();
  }
  if (checkpointing && !error) {
    cp_out.flush();
    if (!cp_out)
      error = std::make_exception_ptr(CheckpointError("checkpoint final flush failed"));
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t u = 0; u < unit_count; ++u) {
    if (prior[u]) continue;
    std::vector<MonodromyRep>& out = slots[u];
    result.solutions.insert(result.solutions.end(),
                            std::make_move_iterator(out.begin()),
                            std::make_move_iterator(out.end()));
  }

  const Perm sigma0 = n >= 2 ? Perm::transposition(n, 0, 1) : Perm();
  std::uint64_t all_count = 0;
  for (std::size_t ti = 0; ti < tables.size(); ++ti) {
    std::uint64_t table_sum = 0;
    for (std::size_t u = table_offset[ti]; u < table_offset[ti + 1]; ++u)
      table_sum += unit_counts[u];
    all_count += table_sum;
    if (tables[ti].sigma == sigma0) result.fixed_sigma_count = table_sum;
  }
  result.total_count = params.fix_sigma
                           ? result.fixed_sigma_count * transposition_count(n)
                           : all_count;
  result.complete = done_units == unit_count;
  result.elapsed = std::chrono::steady_clock::now() - t0;
  return result;
}

}  // namespace

std::string rep_key(const MonodromyRep& rep) {
  std::string key = std::to_string(rep.degree);
  for (const Perm* p : {&rep.sigma, &rep.a1, &rep.a2, &rep.b1, &rep.b2}) {
    key += ' ';
    key += p->to_one_line();
  }
  return key;
}

std::uint64_t rep_digest(const MonodromyRep& rep) { return fnv1a64(rep_key(rep)); }

std::uint64_t transposition_count(int degree) {
  if (degree < 2) return 0;
  return static_cast<std::uint64_t>(degree) * (degree - 1) / 2;
}

std::vector<Perm> r2_candidates(const Perm& sigma) {
  if (!is_transposition(sigma))
    throw std::invalid_argument("r2_candidates: sigma must be a transposition, got " +
                                sigma.cycle_notation());
  const Perm sigma_inv = inverse(sigma);
  std::vector<Perm> out;
  for (const Perm& x : all_perms_lex(sigma.degree())) {
    const Perm sx = compose(sigma_inv, x);               // s^-1 x
    const Perm lhs = compose(sx, sx);                    // s^-1 x s^-1 x
    const Perm rhs = compose(compose(x, sx), sigma_inv); // x s^-1 x s^-1
    if (lhs == rhs) out.push_back(x);
  }
  return out;
}

EnumerationResult enumerate(const SearchConfig& config) {
  RunParams params;
  params.degree = config.degree;
  params.fix_sigma = config.fix_sigma;
  params.worker_count = config.worker_count;
  params.checkpoint_interval = config.checkpoint_interval;
  params.limit = config.limit;
  params.checkpoint_path = config.checkpoint_path;
  params.resuming = false;
  params.on_progress = config.on_progress;
  return run_search(params);
}

CheckpointInfo checkpoint_info(const std::filesystem::path& checkpoint_path) {
  CheckpointData data = read_checkpoint(checkpoint_path);
  CheckpointInfo info;
  info.degree = data.degree;
  info.fix_sigma = data.fix_sigma;
  info.partitions = data.units;
  for (const auto& rec : data.done)
    if (rec) ++info.completed;
  return info;
}

EnumerationResult resume(const std::filesystem::path& checkpoint_path,
                         const ResumeOptions& options) {
  CheckpointData header = read_checkpoint(checkpoint_path);
  RunParams params;
  params.degree = header.degree;
  params.fix_sigma = header.fix_sigma;
  params.worker_count = options.worker_count;
  params.checkpoint_interval = options.checkpoint_interval;
  params.limit = options.limit;
  params.checkpoint_path = checkpoint_path;
  params.resuming = true;
  params.on_progress = options.on_progress;
  return run_search(params);
}

EnumerationResult brute_force_oracle(int degree) {
  if (degree < 1) throw std::invalid_argument("brute_force_oracle: degree must be >= 1");
  if (degree > 3)
    throw std::invalid_argument("brute_force_oracle: degree " + std::to_string(degree) +
                                " rejected (cost is |Sn|^5 relation checks)");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Perm> sn = all_perms_lex(degree);
  const Perm sigma0 = degree >= 2 ? Perm::transposition(degree, 0, 1) : Perm();

  EnumerationResult result;
  result.degree = degree;
  result.fix_sigma = false;
  for (const Perm& sigma : sn) {
    if (!is_transposition(sigma)) continue;
    for (const Perm& a1 : sn)
      for (const Perm& a2 : sn)
        for (const Perm& b1 : sn)
          for (const Perm& b2 : sn) {
            const Assignment asg(a1, a2, b1, b2, sigma);
            if (!satisfies_all_relations(asg)) continue;
            if (static_cast<int>(orbit_of_point({a1, a2, b1, b2, sigma}, 0).size()) != degree)
              continue;
            result.solutions.push_back(MonodromyRep{degree, sigma, a1, a2, b1, b2});
            ++result.total_count;
            if (degree >= 2 && sigma == sigma0) ++result.fixed_sigma_count;
          }
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  result.complete = true;
  result.elapsed = std::chrono::steady_clock::now() - t0;
  return result;
}

bool VerifyReport::pass() const {
  for (bool r : relations)
    if (!r) return false;
  return sigma_is_transposition && transitive;
}

std::vector<std::string> VerifyReport::failure_names() const {
  std::vector<std::string> names;
  const std::vector<Relation>& rels = bellingeri_relations();
  for (int i = 0; i < kRelationCount; ++i)
    if (!relations[i]) names.push_back(tag_name(rels[i].tag));
  if (!sigma_is_transposition) names.push_back("sigma-not-transposition");
  if (!transitive) names.push_back("not-transitive");
  return names;
}

VerifyReport verify(const MonodromyRep& rep) {
  VerifyReport report;
  const Assignment asg = rep.to_assignment();
  report.relations = relation_pass_vector(asg);
  report.sigma_is_transposition = is_transposition(rep.sigma);
  report.transitive =
      static_cast<int>(orbit_of_point({rep.a1, rep.a2, rep.b1, rep.b2, rep.sigma}, 0).size()) ==
      rep.degree;
  return report;
}

}  // namespace braidmono
