"""Application defaults.

This module only exposes defaults and a helper to return them.
No JSON file I/O or project-local config paths are provided.
If you want to change defaults, edit `DEFAULT_SETTINGS` directly.
"""

DEFAULT_SETTINGS = {
    # Brute-force oracle bounds (largest n each oracle will enumerate)
    'transversal_oracle_bound': 10,  # all_transversals: member count
    'word_oracle_bound': 10,  # configs count / classify: n for surjection enumeration
    'tableau_oracle_bound': 9,  # shape syt-count: cells (n! fillings)
    'average_oracle_bound': 8,  # count average-brute
    'configuration_oracle_bound': 100000,  # configs enumerate: prod |F|
    # Backtracking fallback used by `configs solve` on non-shellable families
    'solver_search_bound': 10,
    # verify suites
    'default_seed': 20240607,
    'verify_samples': 200,
    'verify_bound': 5,
    # Output
    'output_format': 'json',  # 'json' or 'csv'
    # Run history (JSON Lines)
    'log_runs': True,
    'run_log_file': 'run_history.jsonl',
}

def get_defaults():
    """Return a copy of the default settings dict."""
    return dict(DEFAULT_SETTINGS)
