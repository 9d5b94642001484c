"""
Run logging module - tracks every CLI computation with its inputs and outcome.
Uses JSON Lines format for easy appending and parsing.
"""

import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Dict, Any, List


class RunLogger:
    """Logger for tracking CLI runs with metadata."""

    def __init__(self, log_file: str = "run_history.jsonl"):
        self.log_path = Path(log_file)
        self._ensure_dir()

    def _ensure_dir(self):
        """Ensure log directory exists."""
        self.log_path.parent.mkdir(parents=True, exist_ok=True)

    def log_run(
        self,
        command: str,
        exit_code: int,
        inputs: Optional[Dict[str, Any]] = None,
        summary: Optional[str] = None,
        error: Optional[str] = None,
        elapsed: Optional[float] = None
    ) -> bool:
        """
        Log one CLI run.

        Args:
            command: Subcommand path, e.g. "configs solve"
            exit_code: Process exit code (0 computed, 1 negative, 2 input, 3 oracle limit)
            inputs: Parsed inputs echoed into the report
            summary: Short description of the result
            error: Error message when the run failed
            elapsed: Wall-clock seconds spent computing

        Returns:
            True if logged successfully
        """
        entry = {
            "timestamp": datetime.now().isoformat(),
            "command": command,
            "exit_code": exit_code,
            "inputs": inputs,
            "summary": summary,
            "error": error,
            "elapsed": round(elapsed, 6) if elapsed is not None else None
        }

        # Remove None values for cleaner output
        entry = {k: v for k, v in entry.items() if v is not None}

        try:
            with open(self.log_path, 'a', encoding='utf-8') as f:
                f.write(json.dumps(entry, ensure_ascii=False, sort_keys=True) + '\n')
            return True
        except (IOError, OSError) as e:
            print(f"⚠️  Failed to log run: {e}", file=sys.stderr)
            return False

    def get_history(
        self,
        limit: Optional[int] = None,
        command: Optional[str] = None,
        since: Optional[str] = None
    ) -> List[Dict[str, Any]]:
        """
        Get run history with optional filtering.

        Args:
            limit: Maximum number of entries to return (most recent first)
            command: Filter by subcommand path
            since: ISO timestamp to get entries since

        Returns:
            List of run log entries
        """
        if not self.log_path.exists():
            return []

        entries = []
        try:
            with open(self.log_path, 'r', encoding='utf-8') as f:
                for line in f:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        entry = json.loads(line)
                    except json.JSONDecodeError:
                        continue
                    if command and entry.get('command') != command:
                        continue
                    if since and entry.get('timestamp', '') < since:
                        continue
                    entries.append(entry)
        except (IOError, OSError):
            return []

        # newest first
        entries.sort(key=lambda x: x.get('timestamp', ''), reverse=True)

        if limit:
            entries = entries[:limit]

        return entries

    def get_stats(self) -> Dict[str, Any]:
        """Get statistics about run history."""
        history = self.get_history()

        by_command: Dict[str, int] = {}
        by_exit_code: Dict[str, int] = {}
        for entry in history:
            name = entry.get('command', 'unknown')
            by_command[name] = by_command.get(name, 0) + 1
            code = str(entry.get('exit_code', 'unknown'))
            by_exit_code[code] = by_exit_code.get(code, 0) + 1

        return {
            "total_runs": len(history),
            "by_command": by_command,
            "by_exit_code": by_exit_code,
            "log_file": str(self.log_path),
            "newest_entry": history[0].get('timestamp') if history else None,
            "oldest_entry": history[-1].get('timestamp') if history else None
        }

    def search(self, query: str) -> List[Dict[str, Any]]:
        """
        Search run history by command, summary, error or echoed inputs.

        Args:
            query: Search string (case-insensitive)

        Returns:
            List of matching entries
        """
        query_lower = query.lower()
        results = []
        for entry in self.get_history():
            searchable = ' '.join([
                entry.get('command', ''),
                entry.get('summary', ''),
                entry.get('error', ''),
                json.dumps(entry.get('inputs', {}), sort_keys=True)
            ]).lower()
            if query_lower in searchable:
                results.append(entry)
        return results

    def clear_history(self) -> bool:
        """Clear all run history."""
        try:
            if self.log_path.exists():
                self.log_path.unlink()
            return True
        except (IOError, OSError) as e:
            print(f"⚠️  Failed to clear history: {e}", file=sys.stderr)
            return False


# Convenience function for quick logging
def log_run(
    command: str,
    exit_code: int,
    log_file: str = "run_history.jsonl",
    **kwargs
) -> bool:
    """Quick function to log a run without creating a logger instance."""
    logger = RunLogger(log_file)
    return logger.log_run(command, exit_code, **kwargs)
