"""
Settings management for the intersection transform toolkit.
"""

import logging
from pathlib import Path
from typing import Any, Callable, List, Optional

import yaml

from .config import Config

logger = logging.getLogger(__name__)


def _bench_sizes(raw: Any) -> List[int]:
    if not isinstance(raw, (list, tuple)):
        raise TypeError("bench_sizes must be a list")
    sizes = [int(n) for n in raw]
    if any(not 1 <= n <= Config.MAX_GROUND_SET for n in sizes):
        raise ValueError("bench size out of range")
    return sizes


def _bench_ratio(raw: Any) -> float:
    ratio = float(raw)
    if not 0.0 <= ratio <= 1.0:
        raise ValueError("bench_ratio out of range")
    return ratio


class Settings:
    """Manages persisted user defaults."""

    def __init__(self, settings_file: Optional[Path] = None):
        """Initialize settings manager.

        Args:
            settings_file: YAML file to read and write (defaults to ~/.itrans/settings.yaml)
        """
        if settings_file is None:
            settings_file = Path.home() / ".itrans" / "settings.yaml"

        self.settings_file = Path(settings_file)
        self.settings_dir = self.settings_file.parent

        self._data = self._load()

    def _load(self) -> dict:
        """Load settings from file.

        Returns:
            Settings dictionary
        """
        if not self.settings_file.exists():
            return {}

        try:
            with open(self.settings_file, 'r') as f:
                data = yaml.safe_load(f)
        except (yaml.YAMLError, IOError) as e:
            # If file is corrupted, start fresh
            logger.warning("Ignoring unreadable settings file %s: %s", self.settings_file, e)
            return {}

        return data if isinstance(data, dict) else {}

    def _save(self):
        """Save settings to file."""
        try:
            self.settings_dir.mkdir(parents=True, exist_ok=True)
            with open(self.settings_file, 'w') as f:
                yaml.safe_dump(self._data, f, default_flow_style=False, sort_keys=True)
        except IOError as e:
            logger.warning("Failed to save settings: %s", e)

    def _typed(self, key: str, convert: Callable[[Any], Any], default: Any) -> Any:
        """Stored value converted with convert, or default if absent or unusable."""
        if key not in self._data:
            return default
        try:
            return convert(self._data[key])
        except (TypeError, ValueError):
            logger.warning("Ignoring invalid setting %s=%r", key, self._data[key])
            return default

    # =============================================================================
    # Ring Settings
    # =============================================================================

    def get_default_ring(self) -> str:
        """Get the ring used when --ring is omitted.

        Returns:
            Ring selector name (e.g., 'bigint')
        """
        ring = self._data.get('ring')
        if isinstance(ring, str) and ring in Config.RINGS:
            return ring
        return Config.DEFAULT_RING

    def set_default_ring(self, ring: str):
        """Set the default ring.

        Args:
            ring: Ring selector name; must be one of Config.RINGS
        """
        if ring not in Config.RINGS:
            raise ValueError(f"Unknown ring '{ring}'")
        self._data['ring'] = ring
        self._save()

    def get_prime(self) -> int:
        """Get the modulus used by the modp ring.

        Returns:
            Prime modulus
        """
        return self._typed('prime', int, Config.DEFAULT_PRIME)

    def set_prime(self, prime: int):
        """Set the modulus used by the modp ring.

        Args:
            prime: Prime modulus
        """
        self._data['prime'] = int(prime)
        self._save()

    # =============================================================================
    # Logging Settings
    # =============================================================================

    def get_log_level(self) -> str:
        """Get the logging level name.

        Returns:
            Level name such as 'INFO'
        """
        level = str(self._data.get('log_level', Config.DEFAULT_LOG_LEVEL)).upper()
        if not isinstance(logging.getLevelName(level), int):
            return Config.DEFAULT_LOG_LEVEL
        return level

    def set_log_level(self, level: str):
        """Set the logging level name.

        Args:
            level: Level name such as 'DEBUG'
        """
        self._data['log_level'] = level.upper()
        self._save()

    # =============================================================================
    # Benchmark Settings
    # =============================================================================

    def get_bench_sizes(self) -> List[int]:
        """Get the ground set sizes swept by the bench command."""
        sizes = self._typed('bench_sizes', _bench_sizes, [])
        return sizes or list(Config.DEFAULT_BENCH_SIZES)

    def set_bench_sizes(self, sizes: List[int]):
        """Set the ground set sizes swept by the bench command."""
        self._data['bench_sizes'] = [int(n) for n in sizes]
        self._save()

    def get_bench_ratio(self) -> float:
        """Get the path length ratio l/n used by the bench command."""
        return self._typed('bench_ratio', _bench_ratio, Config.DEFAULT_BENCH_RATIO)

    def set_bench_ratio(self, ratio: float):
        """Set the path length ratio l/n used by the bench command."""
        self._data['bench_ratio'] = float(ratio)
        self._save()

    def get_seed(self) -> int:
        """Get the seed for generated benchmark instances."""
        return self._typed('seed', int, Config.DEFAULT_SEED)

    def set_seed(self, seed: int):
        """Set the seed for generated benchmark instances."""
        self._data['seed'] = int(seed)
        self._save()
