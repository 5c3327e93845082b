"""Users, communities, discussions, posts, reactions, chat, profiles."""
