/* C interface to the toricvan shared library.
 *
 * All entry points return a status code:
 *   0  success
 *   1  internal error
 *   2  schema / input error
 *   3  budget exhausted
 *   4  domain error (invalid mathematical input)
 *
 * On success *out holds an owned result whose JSON text is available via
 * tv_result_json until tv_result_free. On failure *out is NULL and
 * tv_last_error returns a thread-local message.
 */
#ifndef TORICVAN_H
#define TORICVAN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tv_result tv_result;

/* Run a job given as a JSON document. */
int tv_run_job_text(const char* json_text, tv_result** out);

/* Run a job stored in a file. */
int tv_run_job_file(const char* path, tv_result** out);

/* Run every *.json golden job under dir and compare expectations.
 * Returns 0 when all pass, 1 when any job fails its expectations. */
int tv_verify_suite(const char* dir, tv_result** out);

/* UTF-8 JSON text of a result; owned by the result. */
const char* tv_result_json(const tv_result* result);

void tv_result_free(tv_result* result);

/* Message of the most recent failure on this thread; never NULL. */
const char* tv_last_error(void);

const char* tv_version(void);

#ifdef __cplusplus
}
#endif

#endif /* TORICVAN_H */
