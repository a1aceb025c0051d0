#include "seqsub/objectives.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "seqsub/errors.hpp"

namespace seqsub {

double eval_tasks(const TaskInstance& inst, const Sequence& s) {
  if (s.length() > inst.stages) throw StageOutOfRange(s.length(), inst.stages);
  thread_local std::vector<double> fail;
  fail.assign(static_cast<std::size_t>(inst.m), 1.0);
  for (int j = 0; j < s.length(); ++j) {
    const double* row = inst.p.data() + (static_cast<std::size_t>(j) * inst.n + s[j]) * inst.m;
    for (int i = 0; i < inst.m; ++i) fail[static_cast<std::size_t>(i)] *= 1.0 - row[i];
  }
  double sum = 0;
  for (int i = 0; i < inst.m; ++i) sum += 1.0 - fail[static_cast<std::size_t>(i)];
  return sum / inst.m;
}

double eval_infogain(const InfoGainInstance& inst, const Sequence& s) {
  if (s.length() > static_cast<int>(inst.sigma2.size())) {
    throw StageOutOfRange(s.length(), static_cast<int>(inst.sigma2.size()));
  }
  double value = 0;
  for (int q = 0; q < inst.d; ++q) {
    double precision = 1.0 / inst.prior_diag[static_cast<std::size_t>(q)];
    for (int i = 0; i < s.length(); ++i) {
      precision += inst.entry(s[i], q) / inst.sigma2[static_cast<std::size_t>(i)];
    }
    value += std::log(inst.prior_diag[static_cast<std::size_t>(q)]) + std::log(precision);
  }
  return 0.5 * value;
}

double eval_searchtrack(const SearchTrackInstance& inst, const Sequence& s) {
  thread_local std::vector<double> survive;
  survive.assign(static_cast<std::size_t>(inst.num_paths), 1.0);
  double p_prev = 1.0;
  double value = 0;
  for (int k = 0; k < s.length(); ++k) {
    const SearchTrackPattern& pat = inst.patterns[static_cast<std::size_t>(s[k])];
    for (int g = 0; g < inst.num_paths; ++g) {
      if (pat.covers[static_cast<std::size_t>(g)]) {
        survive[static_cast<std::size_t>(g)] *= 1.0 - pat.detect_prob;
      }
    }
    double p_cur = 0;
    for (int g = 0; g < inst.num_paths; ++g) p_cur += survive[static_cast<std::size_t>(g)];
    p_cur /= inst.num_paths;
    value += (inst.penalty - pat.time_stamp) * (p_prev - p_cur);
    p_prev = p_cur;
  }
  return value;
}

double eval_recommender(const RecommenderInstance& inst, const Sequence& s) {
  thread_local std::vector<double> carry;
  carry.assign(static_cast<std::size_t>(inst.num_topics), 1.0);
  double value = 0;
  for (int i = 0; i < s.length(); ++i) {
    const double g = inst.satisfaction[static_cast<std::size_t>(s[i])];
    const double* row = inst.coverage.data() + static_cast<std::size_t>(s[i]) * inst.num_topics;
    for (int t = 0; t < inst.num_topics; ++t) {
      value += g * carry[static_cast<std::size_t>(t)] * row[t];
      carry[static_cast<std::size_t>(t)] *= 1.0 - row[t];
    }
  }
  return value / inst.num_topics;
}

namespace {

void write_double(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void write_values(std::ostream& os, const char* name, const std::vector<double>& values) {
  os << name << ' ' << values.size();
  for (double v : values) {
    os << ' ';
    write_double(os, v);
  }
  os << '\n';
}

std::vector<double> read_values(std::istream& is, const char* name) {
  std::string key;
  std::size_t count = 0;
  if (!(is >> key >> count) || key != name) {
    throw ValidationError(std::string("instance file: expected field '") + name + "'");
  }
  std::vector<double> values(count);
  for (double& v : values) {
    if (!(is >> v)) throw ValidationError(std::string("instance file: truncated field '") + name + "'");
  }
  return values;
}

void write_header(std::ostream& os, const char* family) {
  os << "seqsub-instance 1\n";
  os << "family " << family << '\n';
}

void read_header(std::istream& is, const char* family) {
  std::string magic, fam_key, fam;
  int version = 0;
  if (!(is >> magic >> version >> fam_key >> fam) || magic != "seqsub-instance" ||
      fam_key != "family") {
    throw ValidationError("instance file: bad header");
  }
  if (fam != family) {
    throw ValidationError("instance file: family '" + fam + "', expected '" + family + "'");
  }
}

long read_int_field(std::istream& is, const char* name) {
  std::string key;
  long value = 0;
  if (!(is >> key >> value) || key != name) {
    throw ValidationError(std::string("instance file: expected field '") + name + "'");
  }
  return value;
}

}  // namespace

void save_instance(const TaskInstance& inst, std::ostream& os) {
  write_header(os, "tasks");
  os << "m " << inst.m << '\n';
  os << "n " << inst.n << '\n';
  os << "stages " << inst.stages << '\n';
  write_values(os, "p", inst.p);
}

TaskInstance load_task_instance(std::istream& is) {
  read_header(is, "tasks");
  TaskInstance inst;
  inst.m = static_cast<int>(read_int_field(is, "m"));
  inst.n = static_cast<int>(read_int_field(is, "n"));
  inst.stages = static_cast<int>(read_int_field(is, "stages"));
  inst.p = read_values(is, "p");
  if (inst.p.size() != static_cast<std::size_t>(inst.m) * inst.n * inst.stages) {
    throw ValidationError("instance file: tasks tensor size mismatch");
  }
  return inst;
}

void save_instance(const InfoGainInstance& inst, std::ostream& os) {
  write_header(os, "infogain");
  os << "n " << inst.n << '\n';
  os << "d " << inst.d << '\n';
  write_values(os, "entries", inst.entries);
  write_values(os, "prior_diag", inst.prior_diag);
  write_values(os, "sigma2", inst.sigma2);
}

InfoGainInstance load_infogain_instance(std::istream& is) {
  read_header(is, "infogain");
  InfoGainInstance inst;
  inst.n = static_cast<int>(read_int_field(is, "n"));
  inst.d = static_cast<int>(read_int_field(is, "d"));
  inst.entries = read_values(is, "entries");
  inst.prior_diag = read_values(is, "prior_diag");
  inst.sigma2 = read_values(is, "sigma2");
  if (inst.entries.size() != static_cast<std::size_t>(inst.n) * inst.d ||
      inst.prior_diag.size() != static_cast<std::size_t>(inst.d)) {
    throw ValidationError("instance file: infogain size mismatch");
  }
  return inst;
}

void save_instance(const SearchTrackInstance& inst, std::ostream& os) {
  write_header(os, "searchtrack");
  os << "num_paths " << inst.num_paths << '\n';
  os << "num_patterns " << inst.patterns.size() << '\n';
  os << "penalty ";
  write_double(os, inst.penalty);
  os << '\n';
  for (const SearchTrackPattern& pat : inst.patterns) {
    os << "pattern ";
    write_double(os, pat.time_stamp);
    os << ' ';
    write_double(os, pat.detect_prob);
    os << ' ';
    for (std::uint8_t c : pat.covers) os << (c ? '1' : '0');
    os << '\n';
  }
}

SearchTrackInstance load_searchtrack_instance(std::istream& is) {
  read_header(is, "searchtrack");
  SearchTrackInstance inst;
  inst.num_paths = static_cast<int>(read_int_field(is, "num_paths"));
  const long num_patterns = read_int_field(is, "num_patterns");
  std::string key;
  if (!(is >> key >> inst.penalty) || key != "penalty") {
    throw ValidationError("instance file: expected field 'penalty'");
  }
  inst.patterns.resize(static_cast<std::size_t>(num_patterns));
  for (SearchTrackPattern& pat : inst.patterns) {
    std::string mask;
    if (!(is >> key >> pat.time_stamp >> pat.detect_prob >> mask) || key != "pattern" ||
        mask.size() != static_cast<std::size_t>(inst.num_paths)) {
      throw ValidationError("instance file: bad pattern record");
    }
    pat.covers.resize(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i) pat.covers[i] = mask[i] == '1';
  }
  return inst;
}

void save_instance(const RecommenderInstance& inst, std::ostream& os) {
  write_header(os, "recommender");
  os << "n " << inst.n << '\n';
  os << "topics " << inst.num_topics << '\n';
  write_values(os, "satisfaction", inst.satisfaction);
  write_values(os, "coverage", inst.coverage);
}

RecommenderInstance load_recommender_instance(std::istream& is) {
  read_header(is, "recommender");
  RecommenderInstance inst;
  inst.n = static_cast<int>(read_int_field(is, "n"));
  inst.num_topics = static_cast<int>(read_int_field(is, "topics"));
  inst.satisfaction = read_values(is, "satisfaction");
  inst.coverage = read_values(is, "coverage");
  if (inst.satisfaction.size() != static_cast<std::size_t>(inst.n) ||
      inst.coverage.size() != static_cast<std::size_t>(inst.n) * inst.num_topics) {
    throw ValidationError("instance file: recommender size mismatch");
  }
  return inst;
}

}  // namespace seqsub
