ELF   binary data