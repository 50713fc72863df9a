static char f_gold ( String s ) {
    int [ ] count = new int [ 256 ] ;
    for ( char c : s . toCharArray ( ) ) {
        count [ c ] ++ ;
    }
    for ( char c : s . toCharArray ( ) ) {
        if ( count [ c ] == 1 ) {
            return c ;
        }
    }
    return ',' ;
}
