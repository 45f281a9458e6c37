"""Oracle-versus-algorithm sweeps"""
