"""Textual dashboard for browsing and running registered identities."""
