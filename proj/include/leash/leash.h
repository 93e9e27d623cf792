#ifndef LEASH_LEASH_H
#define LEASH_LEASH_H

/* C interface to the leash library. Handles are opaque; every function that
 * can fail returns a status and leaves a message in leash_last_error().
 * Strings returned through char** are owned by the caller and must be
 * released with leash_string_free(). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum leash_status {
  LEASH_OK = 0,
  LEASH_ERR_IO = 1,       /* unreadable file */
  LEASH_ERR_PARSE = 2,    /* malformed document or option text */
  LEASH_ERR_RELATOR = 3,  /* generator images violate a group relator */
  LEASH_ERR_DOMAIN = 4,   /* parameter outside the library's contracts */
  LEASH_ERR_INTERNAL = 5  /* unexpected failure */
} leash_status;

typedef struct leash_action leash_action;

const char* leash_version(void);

/* Message for the most recent failure on the calling thread. */
const char* leash_last_error(void);

void leash_string_free(char* s);

/* Action handles. */
leash_status leash_action_load(const char* path, leash_action** out);
leash_status leash_action_parse(const char* json_text, leash_action** out);
leash_status leash_action_info(const leash_action* action, char** out_json);
void leash_action_free(leash_action* action);

/* options_json is a config document ({"metric": ..., "n": ..., "k": ...,
 * "gamma": ..., "radius": ..., "r1": ..., "eps": ..., "seed": ...,
 * "format": "json"|"text", "suites": [...]}); absent keys take defaults.
 * Reports are rendered per the "format" key. */
leash_status leash_distance(const leash_action* t, const leash_action* s,
                            const char* options_json, char** out_report);
leash_status leash_mixing(const leash_action* t, const char* options_json, char** out_report);
leash_status leash_verify(const char* options_json, int* all_passed, char** out_report);
leash_status leash_approx(const leash_action* const* actions, size_t count,
                          const char* options_json, char** out_report);
leash_status leash_net(const leash_action* const* actions, size_t count,
                       const char* options_json, char** out_report);

/* Full pipeline: the config document also carries "command" and "files";
 * the named files are loaded and the command dispatched. all_passed may be
 * NULL; it is meaningful for the verify command. */
leash_status leash_run(const char* config_json, int* all_passed, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* LEASH_LEASH_H */
