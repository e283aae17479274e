/*
 * C interface to the side-chain positioning DNN solver.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns an scp_status; on
 * failure scp_last_error() describes the problem (per thread). Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with scp_string_free().
 */
#ifndef SCPDNN_H
#define SCPDNN_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(SCPDNN_BUILDING_LIBRARY)
#    define SCPDNN_API __declspec(dllexport)
#  else
#    define SCPDNN_API __declspec(dllimport)
#  endif
#else
#  define SCPDNN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scp_status {
  SCP_OK = 0,
  SCP_ERR_INVALID_ARGUMENT = 1,
  SCP_ERR_PARSE = 2,
  SCP_ERR_IO = 3,
  SCP_ERR_TOO_LARGE = 4,
  SCP_ERR_NUMERICAL = 5,
  SCP_ERR_INTERNAL = 6
} scp_status;

typedef enum scp_termination {
  SCP_TERM_MAX_ITER = 0,
  SCP_TERM_RESIDUAL = 1,
  SCP_TERM_GAP_CLOSED = 2
} scp_termination;

typedef enum scp_upper_source {
  SCP_UPPER_COLUMN = 0,
  SCP_UPPER_EIG = 1,
  SCP_UPPER_BOTH = 2
} scp_upper_source;

typedef struct scp_params {
  double beta;
  double gamma;
  double epsilon;
  int64_t max_iter;
  int64_t t_consecutive;
  int64_t bound_period;
  scp_upper_source upper_source;
} scp_params;

typedef struct scp_instance scp_instance;
typedef struct scp_report scp_report;

SCPDNN_API const char* scp_last_error(void);
SCPDNN_API void scp_string_free(char* s);

/* Instances */
SCPDNN_API scp_status scp_instance_parse(const char* text, scp_instance** out);
SCPDNN_API scp_status scp_instance_load(const char* path, scp_instance** out);
SCPDNN_API scp_status scp_instance_random(int p, int m_max, double lo, double hi, uint64_t seed,
                                          scp_instance** out);
SCPDNN_API scp_status scp_instance_serialize(const scp_instance* inst, char** text);
SCPDNN_API scp_status scp_instance_save(const scp_instance* inst, const char* path);
SCPDNN_API int scp_instance_blocks(const scp_instance* inst);
SCPDNN_API int scp_instance_rotamers(const scp_instance* inst);
SCPDNN_API void scp_instance_free(scp_instance* inst);

/* Solving */
SCPDNN_API scp_status scp_default_params(const scp_instance* inst, scp_params* out);
/* params may be NULL for defaults. With run_dee != 0 the instance is reduced
 * by dead-end elimination first and the assignment is mapped back. */
SCPDNN_API scp_status scp_solve(const scp_instance* inst, const scp_params* params, int run_dee,
                                scp_report** out);
SCPDNN_API scp_termination scp_report_termination(const scp_report* report);
SCPDNN_API double scp_report_lbd(const scp_report* report);
SCPDNN_API double scp_report_ubd(const scp_report* report);
SCPDNN_API double scp_report_rel_gap(const scp_report* report);
SCPDNN_API int64_t scp_report_iterations(const scp_report* report);
/* Copies min(capacity, p) 1-based rotamer choices; returns p. */
SCPDNN_API int scp_report_assignment(const scp_report* report, int* choices, int capacity);
/* include_timing == 0 writes time_sec as 0 so repeated solves compare equal. */
SCPDNN_API scp_status scp_report_serialize(const scp_report* report, int include_timing, char** text);
SCPDNN_API void scp_report_free(scp_report* report);

/* Exact enumeration. Writes a JSON fragment {problem, optimum, assignment,
 * enumerated}; fails with SCP_ERR_TOO_LARGE above `limit` selections. */
SCPDNN_API scp_status scp_oracle(const scp_instance* inst, uint64_t limit, double* optimum, char** text);

/* Goldstein dead-end elimination. `summary` receives a JSON object with the
 * surviving rotamers per block and the reduced-to-original index mapping. */
SCPDNN_API scp_status scp_dee(const scp_instance* inst, scp_instance** reduced, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* SCPDNN_H */
